#include "filiform/structure/centralizer.hpp"

#include "filiform/core/errors.hpp"
#include "filiform/structure/roots.hpp"

namespace filiform {

std::string_view to_string(CentralizerKind kind) {
  switch (kind) {
    case CentralizerKind::RankTwo:
      return "rank-two";
    case CentralizerKind::Lattice:
      return "lattice";
    case CentralizerKind::Full:
      return "full";
  }
  return "unknown";
}

bool CentralizerDescription::contains(const GroupElement& x) const {
  if (x.dim() != dim) {
    throw DimensionMismatch(dim, x.dim());
  }
  switch (kind) {
    case CentralizerKind::Full:
      return true;
    case CentralizerKind::Lattice:
      return x.in_lattice();
    case CentralizerKind::RankTwo: {
      // x = g_0^i a_dim^j forces i = t(x) / t(g_0).
      const GroupElement& base = generators.front();
      if (!divides(base.t_exp(), x.t_exp())) {
        return false;
      }
      BigInt i = x.t_exp() / base.t_exp();
      return multiply(x, power(base, BigInt(-i))).is_central();
    }
  }
  return false;
}

CentralizerDescription centralizer(const GroupElement& g) {
  CentralizerDescription out;
  out.dim = g.dim();
  if (g.is_central()) {
    out.kind = CentralizerKind::Full;
  } else if (g.in_lattice()) {
    out.kind = CentralizerKind::Lattice;
  } else {
    out.kind = CentralizerKind::RankTwo;
    RootDecomposition dec = max_root_mod_center(g);
    out.generators = {dec.base, GroupElement::a_power(g.dim(), g.dim(), 1)};
  }
  for (const auto& gen : out.generators) {
    if (!commutes(gen, g)) {
      throw InternalError("centralizer: generator does not commute with input");
    }
  }
  return out;
}

}  // namespace filiform
