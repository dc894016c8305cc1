#include "esp/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace esp {

bool next_partition(std::vector<Part>& parts) {
  std::size_t ones = 0;
  while (ones < parts.size() && parts[parts.size() - 1 - ones] == 1) ++ones;
  if (ones == parts.size()) return false;
  parts.resize(parts.size() - ones);
  const Part v = --parts.back();
  // Redistribute the decremented unit plus the trailing ones in parts <= v.
  std::uint64_t rest = ones + 1;
  while (rest > 0) {
    const Part p = std::min<std::uint64_t>(v, rest);
    parts.push_back(p);
    rest -= p;
  }
  return true;
}

std::vector<Part> first_partition_bounded(std::uint64_t n, Part max_part) {
  if (max_part == 0 && n > 0) throw std::invalid_argument("max_part must be positive");
  std::vector<Part> parts;
  while (n > 0) {
    const Part p = std::min<std::uint64_t>(n, max_part);
    parts.push_back(p);
    n -= p;
  }
  return parts;
}

PartitionStream::PartitionStream(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_partitions requires n >= 1");
  parts_ = {n};
  done_ = false;
}

PartitionStream PartitionStream::resume_from(const Partition& start) {
  if (start.empty()) throw std::invalid_argument("cannot resume from the empty partition");
  PartitionStream s;
  s.parts_.assign(start.parts().begin(), start.parts().end());
  s.done_ = false;
  return s;
}

PartitionStream PartitionStream::with_largest_part(std::uint64_t n, Part largest) {
  if (largest == 0 || largest > n) throw std::invalid_argument("largest part must lie in [1, n]");
  PartitionStream s;
  s.parts_ = {largest};
  auto tail = first_partition_bounded(n - largest, largest);
  s.parts_.insert(s.parts_.end(), tail.begin(), tail.end());
  s.done_ = false;
  s.pin_largest_ = true;
  return s;
}

void PartitionStream::advance() {
  if (done_) return;
  const Part largest = parts_.front();
  if (!next_partition(parts_) || (pin_largest_ && parts_.front() != largest)) done_ = true;
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  auto out = Partition::from_canonical(parts_);
  advance();
  return out;
}

std::vector<Partition> enumerate_partitions(std::uint64_t n) {
  std::vector<Partition> out;
  PartitionStream s(n);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

BigInt count_partitions(std::uint64_t n) {
  static std::mutex mutex;
  static std::vector<BigInt> memo{BigInt(1)};
  std::lock_guard lock(mutex);
  while (memo.size() <= n) {
    const std::uint64_t m = memo.size();
    BigInt total = 0;
    // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2, signs +,+,-,-,...
    for (std::uint64_t k = 1;; ++k) {
      const std::uint64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const bool positive = (k % 2) == 1;
      const std::uint64_t g2 = k * (3 * k + 1) / 2;
      if (positive) {
        total += memo[m - g1];
        if (g2 <= m) total += memo[m - g2];
      } else {
        total -= memo[m - g1];
        if (g2 <= m) total -= memo[m - g2];
      }
    }
    memo.push_back(std::move(total));
  }
  return memo[n];
}

namespace {

// table[m][k] = partitions of m with parts <= k, for m <= n and k <= n.
std::vector<std::vector<std::uint64_t>> bounded_count_table(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint64_t k = 0; k <= n; ++k) table[0][k] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      std::uint64_t v = table[m][k - 1];
      if (k <= m && __builtin_add_overflow(v, table[m - k][k], &v))
        throw std::overflow_error("partition count exceeds 64 bits at n=" + std::to_string(m));
      table[m][k] = v;
    }
  }
  return table;
}

}  // namespace

std::uint64_t count_partitions_bounded(std::uint64_t n, Part max_part) {
  const auto table = bounded_count_table(n);
  return table[n][std::min<std::uint64_t>(max_part, n)];
}

Partition unrank_partition(std::uint64_t n, std::uint64_t index) {
  if (n == 0) throw std::invalid_argument("unrank_partition requires n >= 1");
  const auto table = bounded_count_table(n);
  if (index >= table[n][n]) throw std::out_of_range("partition index out of range");
  std::vector<Part> parts;
  std::uint64_t rest = n;
  Part cap = n;
  while (rest > 0) {
    // Candidates for the next part, largest first; each owns a contiguous block.
    for (Part a = std::min<std::uint64_t>(cap, rest); a >= 1; --a) {
      const std::uint64_t block = table[rest - a][a];
      if (index < block) {
        parts.push_back(a);
        rest -= a;
        cap = a;
        break;
      }
      index -= block;
    }
  }
  return Partition::from_canonical(std::move(parts));
}

}  // namespace esp
