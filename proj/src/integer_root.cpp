#include "esp/reconstruction.hpp"

#include <stdexcept>

namespace esp {

BigInt integer_root(const BigInt& x, std::uint64_t r) {
  if (sgn(x) < 0) throw std::invalid_argument("integer_root of a negative value");
  if (r == 0) throw std::invalid_argument("integer_root requires r >= 1");
  if (r == 1 || sgn(x) == 0) return x;
  const std::uint64_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (r >= bits) return 1;  // 1 <= x < 2^bits <= 2^r

  // Newton from above: x < 2^bits gives root < 2^ceil(bits/r).
  BigInt t;
  mpz_setbit(t.get_mpz_t(), (bits + r - 1) / r);
  const BigInt rr = to_big(r);
  const BigInt rm1 = to_big(r - 1);
  BigInt power, next;
  while (true) {
    mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), r - 1);
    next = (rm1 * t + x / power) / rr;
    if (next >= t) break;
    t = next;
  }
  // t is now floor(x^(1/r)); the loop invariant keeps t >= the floor root.
  return t;
}

}  // namespace esp
