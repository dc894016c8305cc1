#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace esp {

using Part = std::uint64_t;

/// Integer partition: a weakly decreasing sequence of positive parts.
///
/// Instances are always canonical. The empty partition exists only as an
/// intermediate value; every public producer of partitions of a positive
/// size returns a nonempty one.
class Partition {
 public:
  Partition() = default;

  /// Validates an already-descending sequence. Throws NonPositivePart on a
  /// zero part and std::invalid_argument on an increase or a size overflow.
  static Partition from_canonical(std::vector<Part> parts);

  /// Sorts descending, then validates.
  static Partition from_unsorted(std::vector<Part> parts);

  std::span<const Part> parts() const { return parts_; }
  std::uint64_t size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Part largest() const { return parts_.front(); }
  Part operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Descending lexicographic order, the enumeration order.
  friend bool enumerates_before(const Partition& a, const Partition& b);

 private:
  explicit Partition(std::vector<Part> parts, std::uint64_t size)
      : parts_(std::move(parts)), size_(size) {}

  std::vector<Part> parts_;
  std::uint64_t size_ = 0;
};

bool enumerates_before(const Partition& a, const Partition& b);

/// Builds the canonical partition from arbitrary-order raw integers.
Partition make_partition(std::span<const std::int64_t> raw);
Partition make_partition(std::initializer_list<std::int64_t> raw);

}  // namespace esp
