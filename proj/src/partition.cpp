#include "esp/partition.hpp"

#include "esp/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace esp {

Partition Partition::from_canonical(std::vector<Part> parts) {
  std::uint64_t size = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw NonPositivePart("partition part at index " + std::to_string(i) + " is 0");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts are not weakly decreasing");
    if (__builtin_add_overflow(size, parts[i], &size))
      throw std::invalid_argument("partition size overflows 64 bits");
  }
  return Partition(std::move(parts), size);
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return from_canonical(std::move(parts));
}

bool enumerates_before(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                      b.parts_.end(), std::greater<>());
}

Partition make_partition(std::span<const std::int64_t> raw) {
  std::vector<Part> parts;
  parts.reserve(raw.size());
  for (std::int64_t v : raw) {
    if (v <= 0) throw NonPositivePart("nonpositive part " + std::to_string(v));
    parts.push_back(static_cast<Part>(v));
  }
  return Partition::from_unsorted(std::move(parts));
}

Partition make_partition(std::initializer_list<std::int64_t> raw) {
  return make_partition(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

}  // namespace esp
