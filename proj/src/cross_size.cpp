#include "esp/enumeration.hpp"
#include "esp/errors.hpp"
#include "esp/text_format.hpp"
#include "esp/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace esp {

namespace {

// Number of weakly decreasing length-L sequences over [1, B]: C(B + L - 1, L).
BigInt multiset_count(std::size_t length, Part max_part) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), max_part + length - 1, length);
  return out;
}

// Visits every weakly decreasing sequence of `length` parts in [1, max_part],
// in descending lexicographic order.
template <typename Visit>
void for_each_bounded(std::size_t length, Part max_part, Visit&& visit) {
  std::vector<Part> parts(length, max_part);
  while (true) {
    visit(parts);
    std::size_t i = length;
    while (i > 0 && parts[i - 1] == 1) --i;
    if (i == 0) return;
    const Part v = --parts[i - 1];
    std::fill(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end(), v);
  }
}

std::uint64_t image_fingerprint(const std::vector<Part>& parts, std::vector<std::uint64_t>& scratch) {
  scratch.clear();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) scratch.push_back(parts[i] * parts[j]);
  std::sort(scratch.begin(), scratch.end());
  return fnv1a64(std::string_view(reinterpret_cast<const char*>(scratch.data()),
                                  scratch.size() * sizeof(std::uint64_t)));
}

}  // namespace

std::vector<CollisionPair> search_cross_size_collisions(std::size_t length, Part max_part,
                                                        std::uint64_t max_candidates) {
  if (length < 2) throw std::invalid_argument("cross-size search requires length >= 2");
  if (max_part == 0) throw std::invalid_argument("max_part must be positive");
  if (max_part >= (Part{1} << 32)) throw std::invalid_argument("max_part must be below 2^32");
  const BigInt candidates = multiset_count(length, max_part);
  if (candidates > to_big(max_candidates))
    throw ResourceExhausted(candidates.get_str() + " candidate partitions exceed the limit of " +
                            std::to_string(max_candidates));

  // Pass 1: fingerprints only; keep those seen more than once.
  std::vector<std::uint64_t> scratch;
  std::vector<std::uint64_t> fingerprints;
  fingerprints.reserve(*to_u64(candidates));
  for_each_bounded(length, max_part,
                   [&](const std::vector<Part>& parts) { fingerprints.push_back(image_fingerprint(parts, scratch)); });
  std::sort(fingerprints.begin(), fingerprints.end());
  std::unordered_set<std::uint64_t> repeated;
  for (std::size_t i = 1; i < fingerprints.size(); ++i)
    if (fingerprints[i] == fingerprints[i - 1]) repeated.insert(fingerprints[i]);
  fingerprints.clear();
  fingerprints.shrink_to_fit();

  // Pass 2: collect members of repeated buckets, then group by exact image.
  std::unordered_map<std::uint64_t, std::vector<Partition>> buckets;
  for_each_bounded(length, max_part, [&](const std::vector<Part>& parts) {
    const auto fp = image_fingerprint(parts, scratch);
    if (repeated.contains(fp)) buckets[fp].push_back(Partition::from_canonical(parts));
  });

  std::vector<CollisionPair> out;
  for (auto& [fp, members] : buckets) {
    std::map<std::string, std::vector<Partition>> classes;
    for (auto& lambda : members) classes[to_text(pre2(lambda))].push_back(std::move(lambda));
    for (auto& [image, group] : classes) {
      std::sort(group.begin(), group.end(), enumerates_before);
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j) out.push_back(CollisionPair::make(group[i], group[j]));
    }
  }
  std::sort(out.begin(), out.end(), collision_less);
  return out;
}

}  // namespace esp
