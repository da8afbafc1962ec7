#ifndef FILIFORM_STRUCTURE_BEZOUT_HPP
#define FILIFORM_STRUCTURE_BEZOUT_HPP

#include "filiform/core/bigint.hpp"

namespace filiform {

struct BezoutPair {
  BigInt lambda;
  BigInt mu;
};

// For positive A != B with gcd(A, B) < A, returns lambda, mu with
// lambda A - mu B = gcd(A, B), 0 < mu < A and 0 < lambda <= B.
//
// An extended-gcd solution is slid along the solution line by multiples of
// (B/e, A/e) until mu is the least positive value; that point lies on the
// segment where both bounds hold. Throws PreconditionViolation when A | B.
BezoutPair bezout_bounded(const BigInt& a, const BigInt& b);

}  // namespace filiform

#endif  // FILIFORM_STRUCTURE_BEZOUT_HPP
