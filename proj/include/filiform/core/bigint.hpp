#ifndef FILIFORM_CORE_BIGINT_HPP
#define FILIFORM_CORE_BIGINT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace filiform {

using BigInt = mpz_class;

std::size_t hash_value(const BigInt& x) noexcept;

std::string to_string(const BigInt& x);

inline int sign(const BigInt& x) { return sgn(x); }

inline std::strong_ordering compare(const BigInt& a, const BigInt& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// Division rounding toward negative infinity; divisor must be nonzero.
BigInt floor_div(const BigInt& a, const BigInt& b);
// Remainder with the sign of the (positive) divisor: result in [0, |b|).
BigInt floor_mod(const BigInt& a, const BigInt& b);

bool divides(const BigInt& d, const BigInt& x);

// Generalised binomial coefficient C(m, k) = m(m-1)...(m-k+1)/k!, valid for
// every integer m (for m < 0 it equals (-1)^k C(-m+k-1, k)).
BigInt binomial(const BigInt& m, unsigned k);

// floor(x^(1/k)) and ceil(x^(1/k)) for x >= 0, k >= 1, by exact binary search.
BigInt iroot_floor(const BigInt& x, unsigned k);
BigInt iroot_ceil(const BigInt& x, unsigned k);

BigInt ipow(const BigInt& base, unsigned k);

// Throws PreconditionViolation when x does not fit.
std::int64_t to_int64(const BigInt& x);
std::uint64_t to_uint64(const BigInt& x);
bool fits_int64(const BigInt& x);
BigInt from_int64(std::int64_t x);
BigInt from_uint64(std::uint64_t x);

}  // namespace filiform

#endif  // FILIFORM_CORE_BIGINT_HPP
