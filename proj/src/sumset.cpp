#include "esp/sumset.hpp"

#include "esp/errors.hpp"
#include "esp/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace esp {

IntMultiset IntMultiset::from_values(std::vector<std::int64_t> values) {
  std::vector<IntEntry> entries;
  entries.reserve(values.size());
  for (auto v : values) entries.push_back({v, 1});
  return from_entries(std::move(entries));
}

IntMultiset IntMultiset::from_entries(std::vector<IntEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const IntEntry& a, const IntEntry& b) { return a.value > b.value; });
  IntMultiset out;
  for (const auto& e : entries) {
    if (e.multiplicity == 0) throw std::invalid_argument("multiset multiplicities must be positive");
    out.total_count_ += e.multiplicity;
    if (!out.entries_.empty() && out.entries_.back().value == e.value)
      out.entries_.back().multiplicity += e.multiplicity;
    else
      out.entries_.push_back(e);
  }
  return out;
}

std::vector<std::int64_t> IntMultiset::values() const {
  std::vector<std::int64_t> out;
  out.reserve(total_count_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

IntMultiset IntMultiset::shifted(std::int64_t delta) const {
  IntMultiset out = *this;
  for (auto& e : out.entries_)
    if (__builtin_add_overflow(e.value, delta, &e.value)) throw std::overflow_error("shift overflows 64 bits");
  return out;
}

std::string to_text(const IntMultiset& multiset) {
  if (multiset.empty()) return std::string(kEmptyText);
  std::string out;
  for (const auto& e : multiset.entries()) {
    if (!out.empty()) out.push_back('+');
    out += std::to_string(e.value);
    out.push_back('^');
    out += std::to_string(e.multiplicity);
  }
  return out;
}

IntMultiset parse_int_multiset(std::string_view text) {
  if (text == kEmptyText) return {};
  std::vector<IntEntry> entries;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find('+', start);
    const auto term = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    const auto caret = term.find('^');
    if (caret == std::string_view::npos)
      throw ParseError("multiset term '" + std::string(term) + "' lacks '^multiplicity'");
    IntEntry entry;
    const auto vt = term.substr(0, caret);
    const auto mt = term.substr(caret + 1);
    auto r1 = std::from_chars(vt.data(), vt.data() + vt.size(), entry.value);
    auto r2 = std::from_chars(mt.data(), mt.data() + mt.size(), entry.multiplicity);
    if (vt.empty() || r1.ec != std::errc{} || r1.ptr != vt.data() + vt.size() || mt.empty() ||
        r2.ec != std::errc{} || r2.ptr != mt.data() + mt.size())
      throw ParseError("invalid multiset term '" + std::string(term) + "'");
    if (entry.multiplicity == 0) throw ParseError("multiset multiplicities must be positive");
    entries.push_back(entry);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return IntMultiset::from_entries(std::move(entries));
}

IntMultiset pairwise_sums(const IntMultiset& x) {
  if (x.total_count() < 2) throw std::invalid_argument("pairwise_sums requires at least two elements");
  const auto entries = x.entries();
  std::vector<IntEntry> out;
  auto add = [](std::int64_t a, std::int64_t b) {
    std::int64_t s;
    if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("pairwise sum overflows 64 bits");
    return s;
  };
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto m = entries[i].multiplicity;
    if (m >= 2) out.push_back({add(entries[i].value, entries[i].value), m * (m - 1) / 2});
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      out.push_back({add(entries[i].value, entries[j].value), m * entries[j].multiplicity});
  }
  return IntMultiset::from_entries(std::move(out));
}

std::vector<SumCollision> search_sum_collisions(std::size_t length, std::int64_t max_abs) {
  if (length < 2) throw std::invalid_argument("sum collision search requires length >= 2");
  if (max_abs < 1) throw std::invalid_argument("max_abs must be positive");
  BigInt candidates;
  mpz_bin_uiui(candidates.get_mpz_t(), static_cast<unsigned long>(max_abs) + length, length);
  if (candidates > (1 << 24))
    throw ResourceExhausted(candidates.get_str() + " candidate multisets exceed the search limit");

  // Keyed by the ascending pairwise-sum list; members in enumeration order.
  std::map<std::vector<std::int64_t>, std::vector<IntMultiset>> groups;
  std::vector<std::int64_t> xs(length, 0);
  std::vector<std::int64_t> sums;
  while (true) {
    sums.clear();
    for (std::size_t i = 0; i < length; ++i)
      for (std::size_t j = i + 1; j < length; ++j) sums.push_back(xs[i] + xs[j]);
    std::sort(sums.begin(), sums.end());
    groups[sums].push_back(IntMultiset::from_values(xs));

    // Next nondecreasing sequence over [0, max_abs].
    std::size_t i = length;
    while (i > 0 && xs[i - 1] == max_abs) --i;
    if (i == 0) break;
    const auto v = ++xs[i - 1];
    std::fill(xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end(), v);
  }

  std::vector<SumCollision> out;
  for (const auto& [key, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const auto low = std::min(members[a].entries().back().value, members[b].entries().back().value);
        if (low != 0) continue;  // a translate of a pair with joint minimum 0
        auto first = members[a];
        auto second = members[b];
        if (second < first) std::swap(first, second);
        const bool sets = first.is_set() && second.is_set();
        out.push_back({std::move(first), std::move(second), sets});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SumCollision& x, const SumCollision& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  return out;
}

CollisionPair exp_lift(const std::pair<IntMultiset, IntMultiset>& pair, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("exp_lift requires base >= 2");
  auto lift = [base](const IntMultiset& x) {
    std::vector<Part> parts;
    for (auto v : x.values()) {
      if (v < 0) throw std::invalid_argument("exp_lift requires nonnegative values");
      Part p = 1;
      for (std::int64_t e = 0; e < v; ++e)
        if (__builtin_mul_overflow(p, base, &p))
          throw std::overflow_error(std::to_string(base) + "^" + std::to_string(v) + " exceeds 64 bits");
      parts.push_back(p);
    }
    return Partition::from_unsorted(std::move(parts));
  };
  auto first = lift(pair.first);
  auto second = lift(pair.second);
  if (first == second) throw LiftVerificationFailed("lifted partitions coincide: " + to_text(first));
  if (pre2(first) != pre2(second))
    throw LiftVerificationFailed("pre2 images of " + to_text(first) + " and " + to_text(second) + " differ");
  return CollisionPair::make(std::move(first), std::move(second));
}

}  // namespace esp
