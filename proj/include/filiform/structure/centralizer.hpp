#ifndef FILIFORM_STRUCTURE_CENTRALIZER_HPP
#define FILIFORM_STRUCTURE_CENTRALIZER_HPP

#include <string_view>
#include <vector>

#include "filiform/core/element.hpp"

namespace filiform {

enum class CentralizerKind {
  // <g_0, a_dim>, free abelian of rank two, for g outside the lattice.
  RankTwo,
  // The lattice subgroup Z^dim x 1, for lattice elements off the centre.
  Lattice,
  // The whole group, for central elements.
  Full,
};

std::string_view to_string(CentralizerKind kind);

struct CentralizerDescription {
  std::size_t dim = 1;
  CentralizerKind kind = CentralizerKind::Full;
  // {g_0, a_dim} for RankTwo; empty otherwise.
  std::vector<GroupElement> generators;

  // Membership in the described subgroup.
  bool contains(const GroupElement& x) const;
};

CentralizerDescription centralizer(const GroupElement& g);

}  // namespace filiform

#endif  // FILIFORM_STRUCTURE_CENTRALIZER_HPP
