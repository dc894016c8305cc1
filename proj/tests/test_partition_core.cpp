#include "esp/errors.hpp"
#include "esp/partition.hpp"
#include "esp/product_multiset.hpp"
#include "esp/text_format.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace esp {
namespace {

using testing::flatten;
using testing::parts_of;

TEST(MakePartition, CanonicalizesPaperExample) {
  const auto p = make_partition({4, 2, 1, 1});
  EXPECT_EQ(parts_of(p), (oracle::Parts{4, 2, 1, 1}));
  EXPECT_EQ(p.size(), 8u);
  EXPECT_EQ(p.length(), 4u);
}

TEST(MakePartition, SortsDescending) {
  const auto p = make_partition({1, 2});
  EXPECT_EQ(parts_of(p), (oracle::Parts{2, 1}));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.length(), 2u);
}

TEST(MakePartition, RejectsZeroAndNegative) {
  EXPECT_THROW(make_partition({3, 0}), NonPositivePart);
  EXPECT_THROW(make_partition({-1, 4}), NonPositivePart);
}

TEST(Partition, FromCanonicalRejectsIncrease) {
  EXPECT_THROW(Partition::from_canonical({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition::from_canonical({2, 0}), NonPositivePart);
}

TEST(Partition, EmptyIsAllowedAsIntermediate) {
  const auto p = Partition::from_canonical({});
  EXPECT_EQ(p.size(), 0u);
  EXPECT_EQ(p.length(), 0u);
}

TEST(Partition, SizeOverflowIsRejected) {
  EXPECT_THROW(Partition::from_canonical({UINT64_MAX, 1}), std::invalid_argument);
}

TEST(PreK, PaperExample) {
  const auto image = pre_k(make_partition({4, 2, 1, 1}), 2);
  EXPECT_EQ(to_text(image), "8^1+4^2+2^2+1^1");
  EXPECT_EQ(image.total_count(), 6u);
}

TEST(PreK, TooFewPartsGivesEmpty) {
  EXPECT_TRUE(pre_k(make_partition({5}), 2).empty());
  EXPECT_TRUE(pre_k(make_partition({2, 1}), 3).empty());
}

TEST(PreK, AllOnes) { EXPECT_EQ(to_text(pre_k(make_partition({1, 1, 1}), 2)), "1^3"); }

TEST(PreK, SingleTripleProduct) { EXPECT_EQ(to_text(pre_k(make_partition({2, 1, 1}), 3)), "2^1"); }

TEST(PreK, KOneIsThePartsThemselves) {
  EXPECT_EQ(to_text(pre_k(make_partition({3, 3, 1}), 1)), "3^2+1^1");
}

TEST(PreK, ZeroKIsRejected) { EXPECT_THROW(pre_k(make_partition({1}), 0), std::invalid_argument); }

TEST(PreK, OverflowPromotesToBigIntegers) {
  const Part big = Part{1} << 40;
  const auto lambda = Partition::from_canonical({big, big, 3});
  const auto image = pre2(lambda);
  EXPECT_EQ(to_text(image), "1208925819614629174706176^1+3298534883328^2");
  const auto triple = pre_k(lambda, 3);
  EXPECT_EQ(triple.max(), mpz_class("3626777458843887524118528"));
  EXPECT_EQ(pre2_encoding(lambda), to_text(image));
}

TEST(ElementarySymmetric, PaperExpansion) {
  EXPECT_EQ(elementary_symmetric(make_partition({4, 2, 1, 1}), 2), 21);
}

TEST(ElementarySymmetric, BeyondLengthIsZero) {
  EXPECT_EQ(elementary_symmetric(make_partition({4, 2, 1, 1}), 5), 0);
}

TEST(ElementarySymmetric, FirstIsSumAndZerothIsOne) {
  EXPECT_EQ(elementary_symmetric(make_partition({3, 2}), 1), 5);
  EXPECT_EQ(elementary_symmetric(make_partition({3, 2}), 0), 1);
}

TEST(ProductMultiset, FromEntriesMergesAndValidates) {
  auto m = ProductMultiset::from_entries({{4, 1}, {8, 1}, {4, 1}});
  EXPECT_EQ(to_text(m), "8^1+4^2");
  EXPECT_EQ(m.total_count(), 3u);
  EXPECT_THROW(ProductMultiset::from_entries({{0, 1}}), std::invalid_argument);
  EXPECT_THROW(ProductMultiset::from_entries({{3, 0}}), std::invalid_argument);
}

TEST(TextFormat, ParsesCanonicalForms) {
  EXPECT_EQ(parse_partition("4,2,1,1"), make_partition({4, 2, 1, 1}));
  EXPECT_EQ(parse_partition("1,2"), make_partition({2, 1}));
  EXPECT_EQ(to_text(parse_product_multiset("8^1+4^2+2^2+1^1")), "8^1+4^2+2^2+1^1");
  EXPECT_TRUE(parse_product_multiset("empty").empty());
  EXPECT_TRUE(parse_partition("empty").empty());
}

TEST(TextFormat, RejectsMalformed) {
  EXPECT_THROW(parse_partition(""), ParseError);
  EXPECT_THROW(parse_partition("4,,1"), ParseError);
  EXPECT_THROW(parse_partition("4,a"), ParseError);
  EXPECT_THROW(parse_partition("-1"), ParseError);
  EXPECT_THROW(parse_partition("3,0"), NonPositivePart);
  EXPECT_THROW(parse_product_multiset("8"), ParseError);
  EXPECT_THROW(parse_product_multiset("8^0"), ParseError);
  EXPECT_THROW(parse_product_multiset("0^1"), ParseError);
  EXPECT_THROW(parse_product_multiset("8^1+"), ParseError);
  EXPECT_THROW(parse_product_multiset("-8^1"), ParseError);
}

// Properties over seeded random partitions.

class PartitionCoreProperties : public ::testing::Test {
 protected:
  static constexpr int kIterations = 300;
  std::mt19937_64 rng{20240611};
};

TEST_F(PartitionCoreProperties, PreKMatchesBitmaskOracle) {
  for (int it = 0; it < kIterations; ++it) {
    const auto lambda = testing::random_partition(rng, 16);
    for (unsigned k = 1; k <= 4; ++k) {
      const auto image = pre_k(lambda, k);
      EXPECT_EQ(flatten(image), oracle::subset_products(parts_of(lambda), k));
    }
  }
}

TEST_F(PartitionCoreProperties, CountIsBinomialAndSumIsElementarySymmetric) {
  for (int it = 0; it < kIterations; ++it) {
    const auto lambda = testing::random_partition(rng, 40);
    for (unsigned k = 1; k <= 4; ++k) {
      const auto image = pre_k(lambda, k);
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), lambda.length(), k);
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(image.total_count())), binom);
      EXPECT_EQ(image.sum(), elementary_symmetric(lambda, k));
    }
  }
}

TEST_F(PartitionCoreProperties, Pre2ExtremesAreAdjacentProducts) {
  for (int it = 0; it < kIterations; ++it) {
    const auto lambda = testing::random_partition(rng, 50);
    if (lambda.length() < 2) continue;
    const auto image = pre2(lambda);
    const auto l = lambda.length();
    EXPECT_EQ(image.max(), mpz_class(static_cast<unsigned long>(lambda[0] * lambda[1])));
    EXPECT_EQ(image.min(), mpz_class(static_cast<unsigned long>(lambda[l - 2] * lambda[l - 1])));
  }
}

TEST_F(PartitionCoreProperties, PreKIgnoresInputOrder) {
  for (int it = 0; it < kIterations; ++it) {
    const auto lambda = testing::random_partition(rng, 30);
    std::vector<std::int64_t> raw(lambda.parts().begin(), lambda.parts().end());
    std::shuffle(raw.begin(), raw.end(), rng);
    const auto again = make_partition(raw);
    EXPECT_EQ(again, lambda);
    EXPECT_EQ(pre_k(again, 2), pre_k(lambda, 2));
    EXPECT_EQ(pre_k(again, 3), pre_k(lambda, 3));
  }
}

TEST_F(PartitionCoreProperties, FastEncodingMatchesExactText) {
  for (int it = 0; it < kIterations; ++it) {
    const auto lambda = testing::random_partition(rng, 60);
    EXPECT_EQ(pre2_encoding(lambda), to_text(pre2(lambda)));
  }
}

TEST_F(PartitionCoreProperties, TextRoundTripIsIdentity) {
  for (int it = 0; it < kIterations; ++it) {
    const auto lambda = testing::random_partition(rng, 60);
    const auto pt = to_text(lambda);
    EXPECT_EQ(to_text(parse_partition(pt)), pt);
    const auto mt = to_text(pre2(lambda));
    EXPECT_EQ(to_text(parse_product_multiset(mt)), mt);
  }
}

}  // namespace
}  // namespace esp
