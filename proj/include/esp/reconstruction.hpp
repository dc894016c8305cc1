#pragma once

#include "esp/bigint.hpp"
#include "esp/partition.hpp"
#include "esp/product_multiset.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace esp {

enum class ReconstructionErrorKind {
  NotTriangularCount,
  IndivisibleStep,
  MissingProduct,
  NonMonotoneParts,
  ResidueNonEmpty,
  SizeMismatch,
  NoCandidateRoot,
};

std::string_view to_string(ReconstructionErrorKind kind);

/// A stage of the inversion rejected its input.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(ReconstructionErrorKind kind, const std::string& detail);

  ReconstructionErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ReconstructionErrorKind kind_;
  std::string detail_;
};

/// No partition of the requested size has the given image. `cause` names the
/// failing stage when one did; it is empty when the final image recheck
/// failed.
class NoPreimage : public std::runtime_error {
 public:
  NoPreimage(std::optional<ReconstructionErrorKind> cause, const std::string& detail);

  std::optional<ReconstructionErrorKind> cause() const { return cause_; }

 private:
  std::optional<ReconstructionErrorKind> cause_;
};

/// Two distinct partitions of one size share an image. Never expected; its
/// occurrence is a bug or a counterexample.
class AmbiguousPreimage : public std::logic_error {
 public:
  AmbiguousPreimage(Partition first, Partition second);

  const Partition& first() const { return first_; }
  const Partition& second() const { return second_; }

 private:
  Partition first_;
  Partition second_;
};

/// p[m] = sum of lambda_i^(2^m) for m = 0..depth, recovered from (P, n).
/// For a genuine image every value is positive and p[m] <= p[m-1]^2; for a
/// corrupt one the recurrence is still evaluated exactly and values may be
/// zero or negative.
struct PowerSumSequence {
  std::vector<BigInt> values;
  std::uint64_t source_size = 0;

  unsigned depth() const { return static_cast<unsigned>(values.size()) - 1; }
  const BigInt& operator[](std::size_t m) const { return values[m]; }
};

/// l with l(l-1)/2 == c (l = 1 for c = 0). Throws NotTriangularCount.
std::uint64_t length_from_count(std::uint64_t c);

PowerSumSequence power_sums_from_pre2(const ProductMultiset& image, std::uint64_t n,
                                      unsigned depth);

/// Least M with 2^M > ln(n) / ln(1 + 1/n). At that depth the floor of
/// p[M]^(1/2^M) equals the largest part of every partition of n.
unsigned doubling_depth(std::uint64_t n);

/// floor(x^(1/r)) for x >= 0, r >= 1.
BigInt integer_root(const BigInt& x, std::uint64_t r);

/// Largest part via power-sum doubling. Throws NoCandidateRoot when the root
/// is 0, exceeds n, or a power sum is nonpositive.
Part largest_part(const ProductMultiset& image, std::uint64_t n);

/// Peels parts off the image given the largest part.
Partition greedy_recover(const ProductMultiset& image, Part lambda1);

/// The unique partition of n whose pre2 equals `image`. Throws NoPreimage.
Partition invert_pre2(const ProductMultiset& image, std::uint64_t n);

/// Independent inverse that tries every divisor d of max(image) with
/// d^2 >= max(image) and d <= n as the largest part. Requires a nonempty
/// image. Throws NoPreimage or AmbiguousPreimage.
Partition divisor_scan_invert(const ProductMultiset& image, std::uint64_t n);

}  // namespace esp
