#include "filiform/metric/constants.hpp"

#include <algorithm>

#include "filiform/core/errors.hpp"
#include "filiform/core/phi.hpp"
#include "filiform/metric/waring.hpp"

namespace filiform {

Constants compute_constants(std::size_t dim, WaringBoundSource source) {
  if (dim == 0) {
    throw PreconditionViolation("compute_constants: dimension must be at least 1");
  }
  Constants c;
  c.dim = dim;
  c.M.assign(dim + 1, 0);
  c.D.assign(dim + 1, 0);
  c.C.assign(dim + 1, 0);
  c.M[1] = 1;
  c.D[1] = 1;
  c.C[1] = 2;
  for (std::size_t k = 2; k <= dim; ++k) {
    auto exponent = static_cast<unsigned>(k);
    std::uint64_t m = source == WaringBoundSource::Classical
                          ? waring_classical_bound(exponent)
                          : std::max<std::uint64_t>(1, waring_max_parts_observed(exponent));
    c.M[k] = from_uint64(m);
    c.D[k] = 2 * (c.D[k - 1] + 1) * c.M[k];
    c.C[k] = c.C[k - 1] + c.D[k] * (1 + ipow(c.C[k - 1], exponent));
  }
  c.epsilon = epsilon_bound(dim);
  return c;
}

}  // namespace filiform
