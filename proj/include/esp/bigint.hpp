#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace esp {

using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

/// Returns the value if it is nonnegative and fits in 64 bits.
inline std::optional<std::uint64_t> to_u64(const BigInt& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace esp
