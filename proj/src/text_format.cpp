#include "esp/text_format.hpp"

#include "esp/errors.hpp"

#include <charconv>
#include <string>

namespace esp {

namespace {

std::uint64_t parse_u64(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

std::string to_text(const Partition& lambda) {
  if (lambda.empty()) return std::string(kEmptyText);
  std::string out;
  for (Part p : lambda.parts()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(p);
  }
  return out;
}

std::string to_text(const ProductMultiset& multiset) {
  if (multiset.empty()) return std::string(kEmptyText);
  std::string out;
  for (const auto& e : multiset.entries()) {
    if (!out.empty()) out.push_back('+');
    out += e.value.get_str();
    out.push_back('^');
    out += std::to_string(e.multiplicity);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == kEmptyText) return {};
  std::vector<Part> parts;
  for (auto token : split(text, ',')) {
    const auto v = parse_u64(token, "part");
    if (v == 0) throw NonPositivePart("part 0 in '" + std::string(text) + "'");
    parts.push_back(v);
  }
  try {
    return Partition::from_unsorted(std::move(parts));
  } catch (const NonPositivePart&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ProductMultiset parse_product_multiset(std::string_view text) {
  if (text == kEmptyText) return {};
  std::vector<MultisetEntry> entries;
  for (auto term : split(text, '+')) {
    const auto caret = term.find('^');
    if (caret == std::string_view::npos)
      throw ParseError("multiset term '" + std::string(term) + "' lacks '^multiplicity'");
    const auto value_text = term.substr(0, caret);
    const auto mult = parse_u64(term.substr(caret + 1), "multiplicity");
    if (value_text.empty() || value_text.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("invalid multiset value '" + std::string(value_text) + "'");
    BigInt value(std::string(value_text), 10);
    if (sgn(value) == 0) throw ParseError("multiset values must be positive");
    if (mult == 0) throw ParseError("multiset multiplicities must be positive");
    entries.push_back({std::move(value), mult});
  }
  try {
    return ProductMultiset::from_entries(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace esp
