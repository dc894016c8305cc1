#include "esp/product_multiset.hpp"

#include "esp/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace esp {

namespace {

template <typename T>
std::vector<MultisetEntry> run_length(std::vector<T>& values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<MultisetEntry> entries;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    BigInt value;
    if constexpr (std::is_same_v<T, BigInt>) {
      value = std::move(values[i]);
    } else {
      value = to_big(values[i]);
    }
    entries.push_back({std::move(value), j - i});
    i = j;
  }
  return entries;
}

// Products over k-subsets, depth-first. Returns false if any product overflows.
bool subset_products_u64(std::span<const Part> parts, unsigned k, std::vector<std::uint64_t>& out) {
  std::vector<std::size_t> index(k);
  std::vector<std::uint64_t> prefix(k + 1, 1);
  const std::size_t len = parts.size();
  // index[d] walks from its lower bound; prefix[d + 1] = prefix[d] * parts[index[d]].
  std::size_t depth = 0;
  index[0] = 0;
  while (true) {
    if (index[depth] > len - (k - depth)) {
      if (depth == 0) return true;
      --depth;
      ++index[depth];
      continue;
    }
    if (__builtin_mul_overflow(prefix[depth], parts[index[depth]], &prefix[depth + 1])) return false;
    if (depth + 1 == k) {
      out.push_back(prefix[k]);
      ++index[depth];
    } else {
      index[depth + 1] = index[depth] + 1;
      ++depth;
    }
  }
}

void subset_products_big(std::span<const Part> parts, unsigned k, std::vector<BigInt>& out) {
  std::vector<std::size_t> index(k);
  std::vector<BigInt> prefix(k + 1, BigInt(1));
  const std::size_t len = parts.size();
  std::size_t depth = 0;
  index[0] = 0;
  while (true) {
    if (index[depth] > len - (k - depth)) {
      if (depth == 0) return;
      --depth;
      ++index[depth];
      continue;
    }
    prefix[depth + 1] = prefix[depth] * to_big(parts[index[depth]]);
    if (depth + 1 == k) {
      out.push_back(prefix[k]);
      ++index[depth];
    } else {
      index[depth + 1] = index[depth] + 1;
      ++depth;
    }
  }
}

}  // namespace

ProductMultiset ProductMultiset::from_values(std::vector<BigInt> values) {
  for (const auto& v : values)
    if (sgn(v) <= 0) throw std::invalid_argument("multiset values must be positive");
  ProductMultiset out;
  out.total_count_ = values.size();
  out.entries_ = run_length(values);
  return out;
}

ProductMultiset ProductMultiset::from_values(std::vector<std::uint64_t> values) {
  for (auto v : values)
    if (v == 0) throw std::invalid_argument("multiset values must be positive");
  ProductMultiset out;
  out.total_count_ = values.size();
  out.entries_ = run_length(values);
  return out;
}

ProductMultiset ProductMultiset::from_entries(std::vector<MultisetEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const MultisetEntry& a, const MultisetEntry& b) { return a.value > b.value; });
  ProductMultiset out;
  for (auto& e : entries) {
    if (sgn(e.value) <= 0) throw std::invalid_argument("multiset values must be positive");
    if (e.multiplicity == 0) throw std::invalid_argument("multiset multiplicities must be positive");
    if (__builtin_add_overflow(out.total_count_, e.multiplicity, &out.total_count_))
      throw std::invalid_argument("multiset count overflows 64 bits");
    if (!out.entries_.empty() && out.entries_.back().value == e.value) {
      if (__builtin_add_overflow(out.entries_.back().multiplicity, e.multiplicity,
                                 &out.entries_.back().multiplicity))
        throw std::invalid_argument("multiplicity overflows 64 bits");
    } else {
      out.entries_.push_back(std::move(e));
    }
  }
  return out;
}

BigInt ProductMultiset::sum() const {
  BigInt total = 0;
  for (const auto& e : entries_) total += e.value * to_big(e.multiplicity);
  return total;
}

ProductMultiset pre_k(const Partition& lambda, unsigned k) {
  if (k == 0) throw std::invalid_argument("pre_k requires k >= 1");
  if (lambda.length() < k) return {};
  std::vector<std::uint64_t> small;
  if (subset_products_u64(lambda.parts(), k, small)) return ProductMultiset::from_values(std::move(small));
  std::vector<BigInt> big;
  subset_products_big(lambda.parts(), k, big);
  return ProductMultiset::from_values(std::move(big));
}

BigInt elementary_symmetric(const Partition& lambda, unsigned k) {
  if (k > lambda.length()) return 0;
  // e[j] over a growing prefix of the parts.
  std::vector<BigInt> e(k + 1, BigInt(0));
  e[0] = 1;
  for (Part x : lambda.parts()) {
    const BigInt bx = to_big(x);
    for (unsigned j = k; j >= 1; --j) e[j] += bx * e[j - 1];
  }
  return e[k];
}

std::string pre2_encoding(const Partition& lambda) {
  const auto parts = lambda.parts();
  if (parts.size() < 2) return std::string(kEmptyText);
  std::vector<std::uint64_t> products;
  products.reserve(parts.size() * (parts.size() - 1) / 2);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      std::uint64_t q;
      if (__builtin_mul_overflow(parts[i], parts[j], &q)) return to_text(pre2(lambda));
      products.push_back(q);
    }
  }
  std::sort(products.begin(), products.end(), std::greater<>());
  std::string out;
  out.reserve(products.size() * 4);
  char buf[24];
  for (std::size_t i = 0; i < products.size();) {
    std::size_t j = i;
    while (j < products.size() && products[j] == products[i]) ++j;
    if (!out.empty()) out.push_back('+');
    auto r = std::to_chars(buf, buf + sizeof buf, products[i]);
    out.append(buf, r.ptr);
    out.push_back('^');
    r = std::to_chars(buf, buf + sizeof buf, static_cast<std::uint64_t>(j - i));
    out.append(buf, r.ptr);
    i = j;
  }
  return out;
}

}  // namespace esp
