#include "esp/reconstruction.hpp"

#include "esp/text_format.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace esp {

std::string_view to_string(ReconstructionErrorKind kind) {
  switch (kind) {
    case ReconstructionErrorKind::NotTriangularCount: return "NotTriangularCount";
    case ReconstructionErrorKind::IndivisibleStep: return "IndivisibleStep";
    case ReconstructionErrorKind::MissingProduct: return "MissingProduct";
    case ReconstructionErrorKind::NonMonotoneParts: return "NonMonotoneParts";
    case ReconstructionErrorKind::ResidueNonEmpty: return "ResidueNonEmpty";
    case ReconstructionErrorKind::SizeMismatch: return "SizeMismatch";
    case ReconstructionErrorKind::NoCandidateRoot: return "NoCandidateRoot";
  }
  return "Unknown";
}

ReconstructionError::ReconstructionError(ReconstructionErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

NoPreimage::NoPreimage(std::optional<ReconstructionErrorKind> cause, const std::string& detail)
    : std::runtime_error("NoPreimage: " + detail), cause_(cause) {}

AmbiguousPreimage::AmbiguousPreimage(Partition first, Partition second)
    : std::logic_error("AmbiguousPreimage: " + to_text(first) + " and " + to_text(second) +
                       " share an image and a size"),
      first_(std::move(first)),
      second_(std::move(second)) {}

std::uint64_t length_from_count(std::uint64_t c) {
  if (c == 0) return 1;
  // l = (1 + sqrt(1 + 8c)) / 2
  BigInt disc = to_big(c) * 8 + 1;
  BigInt root = sqrt(disc);
  if (root * root != disc)
    throw ReconstructionError(ReconstructionErrorKind::NotTriangularCount,
                              std::to_string(c) + " is not a triangular number");
  BigInt len = (root + 1) / 2;
  return *to_u64(len);
}

PowerSumSequence power_sums_from_pre2(const ProductMultiset& image, std::uint64_t n, unsigned depth) {
  PowerSumSequence out;
  out.source_size = n;
  out.values.reserve(depth + 1);
  out.values.push_back(to_big(n));

  // powers[i] = value_i^(2^(m-1)) at step m.
  std::vector<BigInt> powers;
  std::vector<BigInt> multiplicities;
  for (const auto& e : image.entries()) {
    powers.push_back(e.value);
    multiplicities.push_back(to_big(e.multiplicity));
  }
  BigInt correction, next;
  for (unsigned m = 1; m <= depth; ++m) {
    correction = 0;
    for (std::size_t i = 0; i < powers.size(); ++i) correction += multiplicities[i] * powers[i];
    next = out.values.back() * out.values.back() - 2 * correction;
    out.values.push_back(next);
    if (m < depth)
      for (auto& p : powers) p *= p;
  }
  return out;
}

unsigned doubling_depth(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("doubling_depth requires n >= 1");
  if (n == 1) return 0;
  const long double ratio = std::log(static_cast<long double>(n)) /
                            std::log1p(1.0L / static_cast<long double>(n));
  unsigned m = 0;
  while (std::ldexp(1.0L, static_cast<int>(m)) <= ratio) ++m;
  // Near a power of two the float comparison may be off by one; settle it
  // exactly: 2^M > ratio  <=>  n^(2^M + 1) < (n + 1)^(2^M).
  const long double nearest = std::ldexp(1.0L, static_cast<int>(m));
  if (m > 0 && nearest - ratio < ratio * 1e-9L) {
    auto exact = [n](unsigned k) {
      const unsigned long e = 1UL << k;
      BigInt lhs, rhs;
      mpz_ui_pow_ui(lhs.get_mpz_t(), n, e + 1);
      BigInt base = to_big(n) + 1;
      mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), e);
      return lhs < rhs;
    };
    while (m > 0 && exact(m - 1)) --m;
    while (!exact(m)) ++m;
  }
  return m;
}

Part largest_part(const ProductMultiset& image, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("largest_part requires n >= 1");
  const unsigned depth = doubling_depth(n);
  const auto sums = power_sums_from_pre2(image, n, depth);
  for (unsigned m = 0; m <= depth; ++m) {
    if (sgn(sums[m]) <= 0)
      throw ReconstructionError(ReconstructionErrorKind::NoCandidateRoot,
                                "power sum p[" + std::to_string(m) + "] is not positive");
  }
  const BigInt root = integer_root(sums[depth], std::uint64_t{1} << depth);
  const auto value = to_u64(root);
  if (!value || *value == 0 || *value > n)
    throw ReconstructionError(ReconstructionErrorKind::NoCandidateRoot,
                              "root " + root.get_str() + " lies outside [1, " + std::to_string(n) + "]");
  return *value;
}

Partition greedy_recover(const ProductMultiset& image, Part lambda1) {
  if (lambda1 == 0) throw std::invalid_argument("greedy_recover requires lambda1 >= 1");
  const std::uint64_t len = length_from_count(image.total_count());
  const auto entries = image.entries();

  // Working multiset: remaining multiplicity per entry; `top` is the first
  // entry with a nonzero count, i.e. the current maximum.
  std::vector<std::uint64_t> remaining;
  remaining.reserve(entries.size());
  for (const auto& e : entries) remaining.push_back(e.multiplicity);
  std::size_t top = 0;

  auto remove_one = [&](const BigInt& value) {
    auto it = std::lower_bound(entries.begin(), entries.end(), value,
                               [](const MultisetEntry& e, const BigInt& v) { return e.value > v; });
    const auto idx = static_cast<std::size_t>(it - entries.begin());
    if (it == entries.end() || it->value != value || remaining[idx] == 0)
      throw ReconstructionError(ReconstructionErrorKind::MissingProduct,
                                "product " + value.get_str() + " is not available");
    --remaining[idx];
    while (top < remaining.size() && remaining[top] == 0) ++top;
  };

  const BigInt big_lambda1 = to_big(lambda1);
  std::vector<Part> parts{lambda1};
  std::vector<BigInt> big_parts{big_lambda1};
  for (std::uint64_t k = 2; k <= len; ++k) {
    if (top >= remaining.size())
      throw ReconstructionError(ReconstructionErrorKind::MissingProduct, "working multiset exhausted");
    const BigInt& q = entries[top].value;
    if (!mpz_divisible_p(q.get_mpz_t(), big_lambda1.get_mpz_t()))
      throw ReconstructionError(ReconstructionErrorKind::IndivisibleStep,
                                std::to_string(lambda1) + " does not divide " + q.get_str());
    BigInt next = q / big_lambda1;
    if (next > big_parts.back())
      throw ReconstructionError(ReconstructionErrorKind::NonMonotoneParts,
                                "part " + next.get_str() + " exceeds previous part " +
                                    std::to_string(parts.back()));
    for (const auto& earlier : big_parts) remove_one(earlier * next);
    parts.push_back(*to_u64(next));
    big_parts.push_back(std::move(next));
  }
  if (top < remaining.size())
    throw ReconstructionError(ReconstructionErrorKind::ResidueNonEmpty,
                              "products remain after recovering " + std::to_string(len) + " parts");
  return Partition::from_canonical(std::move(parts));
}

namespace {

void confirm_size(const Partition& candidate, std::uint64_t n) {
  if (candidate.size() != n)
    throw ReconstructionError(ReconstructionErrorKind::SizeMismatch,
                              "recovered " + to_text(candidate) + " has size " +
                                  std::to_string(candidate.size()) + ", expected " + std::to_string(n));
}

}  // namespace

Partition invert_pre2(const ProductMultiset& image, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("invert_pre2 requires n >= 1");
  if (image.empty()) return Partition::from_canonical({n});
  Partition result;
  try {
    const std::uint64_t len = length_from_count(image.total_count());
    if (len > n)
      throw ReconstructionError(ReconstructionErrorKind::SizeMismatch,
                                std::to_string(len) + " parts cannot sum to " + std::to_string(n));
    result = greedy_recover(image, largest_part(image, n));
    confirm_size(result, n);
  } catch (const ReconstructionError& e) {
    throw NoPreimage(e.kind(), e.what());
  }
  if (pre2(result) != image)
    throw NoPreimage(std::nullopt, "image of " + to_text(result) + " differs from the input");
  return result;
}

Partition divisor_scan_invert(const ProductMultiset& image, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_scan_invert requires n >= 1");
  if (image.empty()) throw std::invalid_argument("divisor_scan_invert requires a nonempty image");
  const BigInt& top = image.max();
  const auto top_u64 = to_u64(top);
  // Any admissible divisor d satisfies d^2 >= top and d <= n, so top <= n^2.
  if (!top_u64 || to_big(n) * to_big(n) < top)
    throw NoPreimage(ReconstructionErrorKind::NoCandidateRoot,
                     "largest product " + top.get_str() + " exceeds n^2");
  const std::uint64_t q = *top_u64;
  const std::uint64_t root = *to_u64(sqrt(top));

  std::vector<Partition> found;
  std::optional<ReconstructionErrorKind> last_error;
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t i = 1; i <= root; ++i) {
    if (q % i == 0 && q / i <= n) candidates.push_back(q / i);
  }
  for (std::uint64_t d : candidates) {
    try {
      Partition candidate = greedy_recover(image, d);
      confirm_size(candidate, n);
      if (pre2(candidate) != image) continue;
      if (!found.empty() && found.front() != candidate) throw AmbiguousPreimage(found.front(), candidate);
      if (found.empty()) found.push_back(std::move(candidate));
    } catch (const ReconstructionError& e) {
      last_error = e.kind();
    }
  }
  if (found.empty()) {
    throw NoPreimage(last_error, candidates.empty() ? "no admissible divisor of " + top.get_str()
                                                    : "no candidate divisor reproduces the image");
  }
  return found.front();
}

}  // namespace esp
