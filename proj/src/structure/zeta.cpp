#include "filiform/structure/zeta.hpp"

#include "filiform/structure/roots.hpp"

namespace filiform {

BigInt zeta(const GroupElement& g, const GroupElement& x) {
  if (g.dim() != x.dim()) {
    throw DimensionMismatch(g.dim(), x.dim());
  }
  if (!commutes(g, x)) {
    throw NotInCentralizer();
  }
  GroupElement lg = lift(g);
  GroupElement lx = lift(x);
  GroupElement c = multiply(multiply(multiply(invert(lx), lg), lx), invert(lg));
  if (!c.is_central()) {
    throw InternalError("zeta: conjugation discrepancy is not central");
  }
  return c.a(c.dim());
}

ZetaData zeta_image(const GroupElement& g) {
  if (g.in_lattice()) {
    throw PreconditionViolation("zeta_image: g must have nonzero t-exponent");
  }
  RootDecomposition dec = max_root_mod_center(g);
  ZetaData z{dec.base, dec.exponent, dec.base.t_exp(), dec.central_offset, 0, 0};
  mpz_gcd(z.e.get_mpz_t(), z.p.get_mpz_t(), z.r.get_mpz_t());
  z.image_generator = z.q * z.e;

  std::size_t k = g.dim();
  GroupElement last_inverse = GroupElement::a_power(k, k, -1);
  if (zeta(g, last_inverse) != z.p * z.q) {
    throw InternalError("zeta_image: zeta(a^{-1}) != p q");
  }
  if (zeta(g, z.base) != z.r * z.q) {
    throw InternalError("zeta_image: zeta(g_0) != r q");
  }
  return z;
}

}  // namespace filiform
