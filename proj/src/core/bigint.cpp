#include "filiform/core/bigint.hpp"

#include <limits>

#include "filiform/core/errors.hpp"

namespace filiform {

std::size_t hash_value(const BigInt& x) noexcept {
  mpz_srcptr z = x.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ULL;
  std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t limb = static_cast<std::size_t>(mpz_getlimbn(z, i));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) {
    throw PreconditionViolation("floor_div: division by zero");
  }
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  if (b == 0) {
    throw PreconditionViolation("floor_mod: division by zero");
  }
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const BigInt& d, const BigInt& x) {
  if (d == 0) {
    return x == 0;
  }
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigInt binomial(const BigInt& m, unsigned k) {
  // Running product m(m-1)...(m-j+1)/j! stays integral at every step.
  BigInt result = 1;
  for (unsigned j = 0; j < k; ++j) {
    result *= (m - j);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), j + 1);
  }
  return result;
}

BigInt ipow(const BigInt& base, unsigned k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

BigInt iroot_floor(const BigInt& x, unsigned k) {
  if (k == 0) {
    throw PreconditionViolation("iroot_floor: k must be positive");
  }
  if (x < 0) {
    throw PreconditionViolation("iroot_floor: negative radicand");
  }
  if (k == 1 || x < 2) {
    return x;
  }
  // Invariant: lo^k <= x < hi^k.
  BigInt lo = 1;
  BigInt hi = BigInt(1) << static_cast<mp_bitcnt_t>(mpz_sizeinbase(x.get_mpz_t(), 2) / k + 1);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

BigInt iroot_ceil(const BigInt& x, unsigned k) {
  BigInt f = iroot_floor(x, k);
  return ipow(f, k) == x ? f : BigInt(f + 1);
}

bool fits_int64(const BigInt& x) { return x.fits_slong_p(); }

std::int64_t to_int64(const BigInt& x) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!x.fits_slong_p()) {
    throw PreconditionViolation("integer does not fit in 64 bits: " + to_string(x));
  }
  return x.get_si();
}

std::uint64_t to_uint64(const BigInt& x) {
  if (!x.fits_ulong_p()) {
    throw PreconditionViolation("integer does not fit in unsigned 64 bits: " + to_string(x));
  }
  return x.get_ui();
}

BigInt from_int64(std::int64_t x) { return BigInt(static_cast<long>(x)); }
BigInt from_uint64(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

}  // namespace filiform
