#ifndef FILIFORM_STRUCTURE_ZETA_HPP
#define FILIFORM_STRUCTURE_ZETA_HPP

#include "filiform/core/element.hpp"
#include "filiform/core/errors.hpp"

namespace filiform {

class NotInCentralizer : public Error {
 public:
  NotInCentralizer() : Error("zeta: x does not commute with g") {}
};

// For g and x commuting in G_k, lifts both to G_{k+1} with zero last
// coordinate and returns m with lift(x)^{-1} lift(g) lift(x) = lift(g) a_{k+1}^m.
// Any other lifts give the same m, and x -> m is a homomorphism on the
// centralizer of g that vanishes on <g>. Throws NotInCentralizer.
BigInt zeta(const GroupElement& g, const GroupElement& x);

// The image of zeta_g for g in G_k outside the lattice, from
// g = g_0^p a_k^r (maximal p, 0 <= r < p) and q = t-exponent of g_0:
// zeta_g(a_k^{-1}) = p q and zeta_g(g_0) = r q, so the image is q e Z with
// e = gcd(p, r) (gcd(p, 0) = p).
struct ZetaData {
  GroupElement base;
  BigInt p;
  BigInt q;
  BigInt r;
  BigInt e;
  BigInt image_generator;  // q * e
};

// Both generator identities are checked by direct zeta calls before return.
ZetaData zeta_image(const GroupElement& g);

}  // namespace filiform

#endif  // FILIFORM_STRUCTURE_ZETA_HPP
