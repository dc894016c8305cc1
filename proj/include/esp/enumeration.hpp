#pragma once

#include "esp/bigint.hpp"
#include "esp/partition.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace esp {

/// Successor of `parts` in descending lexicographic order among partitions of
/// the same size. Returns false (leaving `parts` untouched) at (1,...,1).
bool next_partition(std::vector<Part>& parts);

/// Lexicographically largest partition of n whose parts are at most max_part.
std::vector<Part> first_partition_bounded(std::uint64_t n, Part max_part);

/// Restartable stream of partitions in descending lexicographic order.
///
/// A stream can start at any partition and optionally stop when the largest
/// part changes, which is how the verifier shards the space.
class PartitionStream {
 public:
  /// All partitions of n, starting at (n).
  explicit PartitionStream(std::uint64_t n);

  /// Every partition of start.size() from `start` onward.
  static PartitionStream resume_from(const Partition& start);

  /// Partitions of n whose largest part is exactly `largest`.
  static PartitionStream with_largest_part(std::uint64_t n, Part largest);

  /// Current partition's parts, valid until the next advance().
  const std::vector<Part>& current() const { return parts_; }
  bool done() const { return done_; }
  void advance();

  std::optional<Partition> next();

 private:
  PartitionStream() = default;

  std::vector<Part> parts_;
  bool done_ = true;
  bool pin_largest_ = false;
};

/// All partitions of n as a vector, in enumeration order.
std::vector<Partition> enumerate_partitions(std::uint64_t n);

/// p(n) via Euler's pentagonal-number recurrence, memoized across calls.
BigInt count_partitions(std::uint64_t n);

/// Number of partitions of n with every part at most max_part, in 64 bits.
/// Throws std::overflow_error when the count does not fit.
std::uint64_t count_partitions_bounded(std::uint64_t n, Part max_part);

/// The partition at zero-based `index` in enumeration order.
/// Throws std::out_of_range when index >= p(n) and std::overflow_error when
/// p(n) does not fit in 64 bits.
Partition unrank_partition(std::uint64_t n, std::uint64_t index);

}  // namespace esp
