#ifndef FILIFORM_STRUCTURE_ROOTS_HPP
#define FILIFORM_STRUCTURE_ROOTS_HPP

#include <optional>

#include "filiform/core/element.hpp"

namespace filiform {

// The unique h with h^p = g, if it exists (roots are unique in torsion-free
// nilpotent groups). Requires p >= 1.
//
// In G_1 = Z^2 the coordinates are divided by p. Otherwise the image of g in
// G_{dim-1} is rooted first, the root h0 is lifted with zero last
// coordinate, and h0^p = g a_dim^s; a root exists iff p | s, and then it is
// h0 a_dim^{-s/p}.
std::optional<GroupElement> root_exact(const GroupElement& g, const BigInt& p);

// g = base^exponent * a_dim^central_offset with exponent maximal and
// 0 <= central_offset < exponent.
struct RootDecomposition {
  GroupElement base;
  BigInt exponent;
  BigInt central_offset;
};

// Requires a nonzero t-exponent. The maximal exponent is the largest divisor
// p of |t_exp| for which the image of g in G_{dim-1} has a p-th root (in G_1
// it is |t_exp| itself). The central offset is reduced into [0, p) by moving
// whole multiples of p into the base. The base has t-exponent of the same
// sign as g.
RootDecomposition max_root_mod_center(const GroupElement& g);

}  // namespace filiform

#endif  // FILIFORM_STRUCTURE_ROOTS_HPP
