#ifndef FILIFORM_METRIC_CONSTANTS_HPP
#define FILIFORM_METRIC_CONSTANTS_HPP

#include <cstddef>
#include <vector>

#include "filiform/core/bigint.hpp"

namespace filiform {

enum class WaringBoundSource {
  // g(k), valid for every input.
  Classical,
  // Largest part count actually produced by waring_decompose in this process.
  Observed,
};

// Length constants for the word-synthesis bounds, per level 1..dim:
//   D_1 = 1, D_k = 2 (D_{k-1} + 1) M_k         (central powers)
//   C_1 = 2, C_k = C_{k-1} + D_k (1 + C_{k-1}^k)  (whole ball)
// C_1 is 2 because the base word t^r a_1^{p_1} has |r| + |p_1| letters.
// epsilon bounds the bottom row of phi^m: |epsilon(i, m)| <= epsilon |m|^{dim-i}.
struct Constants {
  std::size_t dim = 1;
  std::vector<BigInt> M;  // index 1..dim; M[0] unused
  std::vector<BigInt> D;
  std::vector<BigInt> C;
  BigInt epsilon;

  const BigInt& M_d() const { return M[dim]; }
  const BigInt& D_d() const { return D[dim]; }
  const BigInt& C_d() const { return C[dim]; }
};

Constants compute_constants(std::size_t dim, WaringBoundSource source = WaringBoundSource::Classical);

}  // namespace filiform

#endif  // FILIFORM_METRIC_CONSTANTS_HPP
