#ifndef FILIFORM_CONJUGACY_SOLVER_HPP
#define FILIFORM_CONJUGACY_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "filiform/core/element.hpp"
#include "filiform/core/word.hpp"

namespace filiform {

// x^{-1} g x.
GroupElement conjugate(const GroupElement& g, const GroupElement& x);

enum class StageKind {
  // G_1 = Z^2: conjugate iff equal.
  Equality,
  // Both elements in the lattice: the conjugator is a power of t.
  Lattice,
  // Lifted quotient conjugator corrected by a centralizer element.
  CentralCorrection,
};

std::string_view to_string(StageKind kind);

// What one recursion level did. Fields not used by a stage stay zero.
struct StageRecord {
  std::size_t level = 1;
  StageKind kind = StageKind::Equality;
  BigInt t_power;  // Lattice: the m of t^m
  BigInt ell;      // CentralCorrection: required a_level offset
  BigInt M;
  BigInt rho;
  BigInt lambda;
  BigInt mu;
};

struct ConjugacyWitness {
  GroupElement conjugator;
  Word word;
  std::size_t word_length = 0;
  // max(|short_word(u)|, |short_word(v)|)
  std::size_t input_size = 0;
  std::vector<StageRecord> stage_log;
};

// For u, v in the lattice: the conjugates of u are phi^m(u), m in Z. The
// first nonzero coordinate i of u fixes m through coordinate i+1; all
// coordinates are then checked. Returns the witness t^m.
std::optional<ConjugacyWitness> solve_in_lattice(const GroupElement& u, const GroupElement& v);

// For gamma outside the lattice (dim >= 2), finds z with
// z^{-1} gamma z = gamma a_dim^ell, or nullopt if ell is not in the image of
// zeta for the image of gamma in G_{dim-1}. Writes ell = M p q + rho q e with
// 0 <= rho < p and returns the lift of
//   y = a_{dim-1}^{-M} (g_0^lambda a_{dim-1}^mu)^rho,
// where lambda r - mu p = e. When r = 0 this is a_{dim-1}^{-M}.
std::optional<GroupElement> solve_central_discrepancy(const GroupElement& gamma, const BigInt& ell,
                                                      StageRecord* record = nullptr);

// Decides conjugacy by induction on dim: solve the images in G_{dim-1},
// lift the conjugator w, measure the exact central discrepancy
// w^{-1} u w = v a_dim^ell, then correct it with solve_central_discrepancy.
// The returned conjugator x satisfies x^{-1} u x = v, checked before return.
std::optional<ConjugacyWitness> solve_conjugacy(const GroupElement& u, const GroupElement& v);

// The same decision without word synthesis.
std::optional<GroupElement> find_conjugator(const GroupElement& u, const GroupElement& v,
                                            std::vector<StageRecord>* log = nullptr);

}  // namespace filiform

#endif  // FILIFORM_CONJUGACY_SOLVER_HPP
