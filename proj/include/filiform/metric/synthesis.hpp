#ifndef FILIFORM_METRIC_SYNTHESIS_HPP
#define FILIFORM_METRIC_SYNTHESIS_HPP

#include <cstddef>

#include "filiform/core/element.hpp"
#include "filiform/core/word.hpp"

namespace filiform {

// A word in t, a_1, ..., a_{dim-1} (just a_1 when dim == 1) equal to a_dim^p
// in G_dim.
//
// For dim >= 2, |p| = sum k_i^dim is split into Waring parts and each part
// contributes w_i^{-1} t^{-k_i} w_i t^{k_i}, where w_i is the recursively
// built word for a_{dim-1}^{k_i^{dim-1}} in G_{dim-1} (or the plain power of
// a_{dim-1} when that is shorter). Since w_i equals
// a_{dim-1}^{k_i^{dim-1}} up to a central factor, each gadget is exactly
// a_dim^{k_i^dim}. Negative p inverts the word; p = 0 gives the empty word.
Word central_power_word(const BigInt& p, std::size_t dim);

// A word for g of length at most C_dim * size_lower_bound(g): a short word
// for the image of g in G_{dim-1}, read in G_dim, followed by the central
// correction a_dim^{p_dim - q} where q is the a_dim-exponent that word
// actually produces. The correction is a commutator-gadget word or a plain
// power of a_dim, whichever is shorter.
Word short_word(const GroupElement& g);

}  // namespace filiform

#endif  // FILIFORM_METRIC_SYNTHESIS_HPP
