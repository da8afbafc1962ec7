#include "filiform/structure/bezout.hpp"

#include "filiform/core/errors.hpp"

namespace filiform {

BezoutPair bezout_bounded(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) {
    throw PreconditionViolation("bezout_bounded: arguments must be positive");
  }
  if (a == b || divides(a, b)) {
    throw PreconditionViolation("bezout_bounded: requires A != B and A not dividing B");
  }
  BigInt e;
  BigInt s;
  BigInt t;
  // s a + t b = e, so lambda = s, mu = -t is one solution.
  mpz_gcdext(e.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  BigInt step = a / e;
  BigInt mu = floor_mod(-t, step);
  BigInt lambda = (e + mu * b) / a;
  if (lambda * a - mu * b != e || mu <= 0 || mu >= a || lambda <= 0 || lambda > b) {
    throw InternalError("bezout_bounded: reduced solution outside bounds");
  }
  return BezoutPair{lambda, mu};
}

}  // namespace filiform
