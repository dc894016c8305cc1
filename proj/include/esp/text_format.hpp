#pragma once

#include "esp/partition.hpp"
#include "esp/product_multiset.hpp"

#include <string>
#include <string_view>

namespace esp {

/// Text used for the empty partition and the empty multiset.
inline constexpr std::string_view kEmptyText = "empty";

// "4,2,1,1"
std::string to_text(const Partition& lambda);
// "8^1+4^2+2^2+1^1"
std::string to_text(const ProductMultiset& multiset);

/// Accepts comma-separated positive integers in any order.
Partition parse_partition(std::string_view text);

/// Accepts "value^multiplicity" terms joined by '+', in any order.
ProductMultiset parse_product_multiset(std::string_view text);

}  // namespace esp
