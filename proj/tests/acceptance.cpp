// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "esp/cli.hpp"
#include "esp/enumeration.hpp"
#include "esp/reconstruction.hpp"
#include "esp/report_json.hpp"
#include "esp/sumset.hpp"
#include "esp/text_format.hpp"
#include "esp/verifier.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace esp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::pair<int, std::string> cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

// Seed-fixed sample shared by criteria 4 and 5.
std::vector<Partition> random_partitions(std::size_t count, std::uint64_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Partition> out;
  while (out.size() < count) {
    const std::uint64_t n = 1 + rng() % max_n;
    out.push_back(sample_partitions(n, 1, rng()).front());
  }
  return out;
}

BigInt direct_power_sum(const Partition& lambda, unsigned long exponent) {
  BigInt total = 0, term;
  for (Part p : lambda.parts()) {
    mpz_ui_pow_ui(term.get_mpz_t(), p, exponent);
    total += term;
  }
  return total;
}

Outcome ac1_paper_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto [s1, pre_out] = cli({"pre", "--k", "2", "4,2,1,1"});
  const double pre_s = seconds_since(t0);
  const auto t1 = Clock::now();
  const auto [s2, inv_out] = cli({"invert", "--n", "8", "8^1+4^2+2^2+1^1"});
  const double inv_s = seconds_since(t1);
  o.require(s1 == 0 && pre_out == "8^1+4^2+2^2+1^1\n", "pre output '" + pre_out + "'");
  o.require(s2 == 0 && inv_out == "4,2,1,1\n", "invert output '" + inv_out + "'");
  o.require(pre_s < 0.010 && inv_s < 0.010, "runtime over 10 ms");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("pre ") + std::to_string(pre_s * 1e3) + " ms, invert " +
              std::to_string(inv_s * 1e3) + " ms";
  return o;
}

Outcome ac2_exhaustive_injectivity() {
  Outcome o;
  double single = 0, parallel = 0;
  for (unsigned workers : {1u, 8u}) {
    const auto t0 = Clock::now();
    for (std::uint64_t n = 1; n <= 55; ++n) {
      VerifyConfig config;
      config.workers = workers;
      const auto report = verify_injectivity(n, config);
      o.require(report.collisions.empty(), "collision at n=" + std::to_string(n));
      o.require(to_big(report.partitions_checked) == count_partitions(n), "count mismatch at n=" + std::to_string(n));
      o.require(report.distinct_images == report.partitions_checked, "distinct images short at n=" + std::to_string(n));
    }
    (workers == 1 ? single : parallel) = seconds_since(t0);
  }
  o.require(count_partitions(55) == 451276, "p(55) != 451276");
  o.require(single < 300, "single-threaded sweep over 5 minutes");
  o.require(parallel < 60, "8-worker sweep over 1 minute");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("n=1..55, 1 worker ") + std::to_string(single) +
              " s, 8 workers " + std::to_string(parallel) + " s";
  return o;
}

Outcome ac3_roundtrip_totality() {
  Outcome o;
  const auto t0 = Clock::now();
  std::uint64_t checked = 0;
  for (std::uint64_t n = 1; n <= 35; ++n) {
    PartitionStream stream(n);
    while (auto lambda = stream.next()) {
      ++checked;
      const auto image = pre2(*lambda);
      bool ok = false;
      try {
        ok = invert_pre2(image, n) == *lambda && (image.empty() || divisor_scan_invert(image, n) == *lambda);
      } catch (const std::exception&) {
      }
      o.require(ok, "round trip failed for " + to_text(*lambda));
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 120, "runtime over 2 minutes");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " partitions, " + std::to_string(s) + " s";
  return o;
}

Outcome ac4_power_sum_identity(const std::vector<Partition>& sample) {
  Outcome o;
  std::uint64_t comparisons = 0;
  for (const auto& lambda : sample) {
    const unsigned depth = doubling_depth(lambda.size());
    const auto sums = power_sums_from_pre2(pre2(lambda), lambda.size(), depth);
    for (unsigned m = 0; m <= depth; ++m, ++comparisons)
      o.require(sums[m] == direct_power_sum(lambda, 1UL << m), "p[" + std::to_string(m) + "] wrong for " + to_text(lambda));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sample.size()) + " partitions, " +
              std::to_string(comparisons) + " exact comparisons";
  return o;
}

Outcome ac5_root_exactness(const std::vector<Partition>& sample) {
  Outcome o;
  std::uint64_t tested = 0;
  for (const auto& lambda : sample) {
    if (lambda.length() < 2) continue;
    ++tested;
    const unsigned depth = doubling_depth(lambda.size());
    const auto sums = power_sums_from_pre2(pre2(lambda), lambda.size(), depth);
    o.require(integer_root(sums[depth], 1UL << depth) == to_big(lambda.largest()), "root wrong for " + to_text(lambda));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(tested) + " partitions with length >= 2";
  return o;
}

Outcome ac6_elementary_symmetric(const std::vector<Partition>& sample) {
  Outcome o;
  for (const auto& lambda : sample)
    for (unsigned k = 1; k <= 4; ++k)
      o.require(pre_k(lambda, k).sum() == elementary_symmetric(lambda, k),
                "k=" + std::to_string(k) + " mismatch for " + to_text(lambda));
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sample.size()) + " partitions x k=1..4";
  return o;
}

Outcome ac7_cross_size() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto pairs = search_cross_size_collisions(4, 128);
  o.require(!pairs.empty(), "no pair at length 4");
  bool lifted_found = false;
  for (const auto& c : pairs) {
    // Independent recomputation of both images from the parts.
    std::vector<BigInt> a, b;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        a.push_back(to_big(c.first()[i]) * to_big(c.first()[j]));
        b.push_back(to_big(c.second()[i]) * to_big(c.second()[j]));
      }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    o.require(a == b, "images differ for " + to_text(c.first()) + " / " + to_text(c.second()));
    o.require(c.first().size() != c.second().size(), "equal sizes for " + to_text(c.first()));
    if (c.first() == make_partition({128, 16, 4, 2}) && c.second() == make_partition({64, 32, 8, 1}))
      lifted_found = to_text(c.shared_image()) == "2048^1+512^1+256^1+64^1+32^1+8^1";
  }
  o.require(lifted_found, "lifted pair (64,32,8,1)/(128,16,4,2) missing");
  o.require(search_cross_size_collisions(3, 12).empty(), "length 3 produced pairs");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(pairs.size()) + " verified pairs at length 4, " +
              std::to_string(seconds_since(t0)) + " s";
  return o;
}

Outcome ac8_sumset_boundary() {
  Outcome o;
  auto t0 = Clock::now();
  const auto three = search_sum_collisions(3, 12);
  const double s3 = seconds_since(t0);
  t0 = Clock::now();
  const auto four = search_sum_collisions(4, 7);
  const double s4 = seconds_since(t0);
  o.require(three.empty(), "length 3 produced pairs");
  o.require(!four.empty(), "length 4 produced no pair");
  for (const auto& c : four) {
    try {
      exp_lift({c.first, c.second});
    } catch (const std::exception& e) {
      o.require(false, std::string("lift failed: ") + e.what());
    }
  }
  o.require(s3 < 30 && s4 < 30, "runtime over 30 s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(four.size()) + " length-4 pairs lifted, " +
              std::to_string(s3 + s4) + " s";
  return o;
}

Outcome ac9_mode_equivalence() {
  Outcome o;
  int runs = 0;
  for (std::uint64_t n : {20u, 40u, 50u}) {
    std::string reference;
    for (auto mode : {MemoryMode::in_memory, MemoryMode::sort_merge}) {
      for (unsigned workers : {1u, 4u, 8u}) {
        VerifyConfig config;
        config.memory_mode = mode;
        config.workers = workers;
        const auto doc = to_json(verify_injectivity(n, config), false).dump();
        ++runs;
        if (reference.empty()) reference = doc;
        o.require(doc == reference, "n=" + std::to_string(n) + " " + std::string(to_string(mode)) + " workers=" +
                                        std::to_string(workers) + " differs");
      }
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(runs) + " reports compared byte for byte";
  return o;
}

}  // namespace

int main() {
  const auto sample = random_partitions(1000, 60, 20240601);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 paper example fidelity", ac1_paper_example},
      {"AC2 exhaustive injectivity n=1..55", ac2_exhaustive_injectivity},
      {"AC3 round-trip totality n<=35", ac3_roundtrip_totality},
      {"AC4 power-sum identity", [&] { return ac4_power_sum_identity(sample); }},
      {"AC5 root exactness", [&] { return ac5_root_exactness(sample); }},
      {"AC6 elementary symmetric consistency", [&] { return ac6_elementary_symmetric(sample); }},
      {"AC7 cross-size necessity", ac7_cross_size},
      {"AC8 sumset boundary", ac8_sumset_boundary},
      {"AC9 mode equivalence and determinism", ac9_mode_equivalence},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << " -- " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
