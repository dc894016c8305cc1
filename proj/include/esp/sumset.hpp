#pragma once

#include "esp/collision.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace esp {

struct IntEntry {
  std::int64_t value = 0;
  std::uint64_t multiplicity = 0;
  friend bool operator==(const IntEntry&, const IntEntry&) = default;
};

/// Multiset of integers in run-length form, values strictly decreasing.
class IntMultiset {
 public:
  IntMultiset() = default;

  static IntMultiset from_values(std::vector<std::int64_t> values);
  /// Any order; duplicates merge; zero multiplicities are rejected.
  static IntMultiset from_entries(std::vector<IntEntry> entries);

  std::span<const IntEntry> entries() const { return entries_; }
  std::uint64_t total_count() const { return total_count_; }
  bool empty() const { return entries_.empty(); }
  /// True when no value repeats.
  bool is_set() const { return entries_.size() == total_count_; }
  /// Values with multiplicity, descending.
  std::vector<std::int64_t> values() const;

  IntMultiset shifted(std::int64_t delta) const;

  friend bool operator==(const IntMultiset&, const IntMultiset&) = default;
  friend auto operator<=>(const IntMultiset& a, const IntMultiset& b) {
    return a.values() <=> b.values();
  }

 private:
  std::vector<IntEntry> entries_;
  std::uint64_t total_count_ = 0;
};

std::string to_text(const IntMultiset& multiset);
IntMultiset parse_int_multiset(std::string_view text);

/// {x_i + x_j : i < j} with multiplicity. Requires at least two elements.
IntMultiset pairwise_sums(const IntMultiset& x);

struct SumCollision {
  IntMultiset first;
  IntMultiset second;
  /// Both sides are genuine sets (no repeated element).
  bool both_sets = false;
};

/// Pairs of distinct multisets of `length` integers in [0, max_abs] with equal
/// pairwise sums. Each pair is translation-normalized: the smallest element
/// across both sides is 0.
std::vector<SumCollision> search_sum_collisions(std::size_t length, std::int64_t max_abs);

/// Thrown when a lifted pair's pre2 images differ.
class LiftVerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps x to base^x on both sides and returns the rechecked product collision.
CollisionPair exp_lift(const std::pair<IntMultiset, IntMultiset>& pair, std::uint64_t base = 2);

}  // namespace esp
