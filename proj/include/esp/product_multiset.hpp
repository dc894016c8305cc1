#pragma once

#include "esp/bigint.hpp"
#include "esp/partition.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace esp {

struct MultisetEntry {
  BigInt value;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const MultisetEntry& a, const MultisetEntry& b) {
    return a.multiplicity == b.multiplicity && a.value == b.value;
  }
};

/// Multiset of positive integers in run-length form, values strictly
/// decreasing. This is the image of pre_k.
class ProductMultiset {
 public:
  ProductMultiset() = default;

  /// Values in any order; zero or negative values are rejected.
  static ProductMultiset from_values(std::vector<BigInt> values);
  static ProductMultiset from_values(std::vector<std::uint64_t> values);

  /// Entries in any order; duplicates merge. Rejects nonpositive values and
  /// zero multiplicities.
  static ProductMultiset from_entries(std::vector<MultisetEntry> entries);

  std::span<const MultisetEntry> entries() const { return entries_; }
  std::uint64_t total_count() const { return total_count_; }
  bool empty() const { return entries_.empty(); }
  const BigInt& max() const { return entries_.front().value; }
  const BigInt& min() const { return entries_.back().value; }

  /// Sum of all values counted with multiplicity.
  BigInt sum() const;

  friend bool operator==(const ProductMultiset&, const ProductMultiset&) = default;

 private:
  std::vector<MultisetEntry> entries_;
  std::uint64_t total_count_ = 0;
};

/// Multiset of products over all k-element index subsets of the parts.
/// Empty when the partition has fewer than k parts. Requires k >= 1.
ProductMultiset pre_k(const Partition& lambda, unsigned k);

inline ProductMultiset pre2(const Partition& lambda) { return pre_k(lambda, 2); }

/// e_k evaluated at the parts; 1 for k = 0 and 0 for k > length.
BigInt elementary_symmetric(const Partition& lambda, unsigned k);

/// Canonical "value^multiplicity" text of pre2(lambda), computed with
/// machine words when every product fits and with BigInt otherwise. The
/// result always equals to_text(pre2(lambda)).
std::string pre2_encoding(const Partition& lambda);

}  // namespace esp
