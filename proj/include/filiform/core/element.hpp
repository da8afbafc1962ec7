#ifndef FILIFORM_CORE_ELEMENT_HPP
#define FILIFORM_CORE_ELEMENT_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "filiform/core/bigint.hpp"

namespace filiform {

// An element of the model filiform group G_d = Z^d x|_phi Z, stored in the
// normal form t^r a_1^{p_1} ... a_d^{p_d}. The normal form is unique, so
// equality of coordinates is equality in the group.
//
// Generators are addressed by index: 0 is t, 1..dim are a_1..a_dim.
class GroupElement {
 public:
  // The identity of G_dim.
  explicit GroupElement(std::size_t dim);
  GroupElement(BigInt t_exp, std::vector<BigInt> a_exps);

  static GroupElement identity(std::size_t dim) { return GroupElement(dim); }
  static GroupElement t_power(std::size_t dim, const BigInt& k);
  // a_i^k for 1 <= i <= dim.
  static GroupElement a_power(std::size_t dim, std::size_t i, const BigInt& k);
  // The element t^{+-1} or a_i^{+-1}.
  static GroupElement generator(std::size_t dim, std::size_t index, bool inverse = false);

  std::size_t dim() const noexcept { return a_exps_.size(); }
  const BigInt& t_exp() const noexcept { return t_exp_; }
  std::span<const BigInt> a_exps() const noexcept { return a_exps_; }
  // Exponent of a_i, 1 <= i <= dim.
  const BigInt& a(std::size_t i) const;

  bool is_identity() const;
  // Member of the lattice subgroup Z^d x 1 (zero t-exponent).
  bool in_lattice() const { return t_exp_ == 0; }
  // Member of the centre <a_dim>.
  bool is_central() const;

  // Right multiplication by a single generator letter, in place. These are
  // the collection steps used by word evaluation and ball enumeration.
  void mul_t(bool inverse);
  void mul_a(std::size_t i, bool inverse);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Dimension first, then (r, p_1, ..., p_d) lexicographically.
  friend std::strong_ordering operator<=>(const GroupElement& g, const GroupElement& h);

  std::size_t hash() const noexcept;

 private:
  BigInt t_exp_;
  std::vector<BigInt> a_exps_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return g.hash(); }
};

// Normal form of g*h:
//   t_exp = g.t + h.t,  a_exps = phi^{h.t}(g.a) + h.a.
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);
// n-fold product by square-and-multiply; negative n uses the inverse.
GroupElement power(const GroupElement& g, const BigInt& n);
// Image in G_{dim-1} = G_dim / <a_dim>. Requires dim >= 2.
GroupElement project(const GroupElement& g);
// Section G_{dim} -> G_{dim+1} with zero last coordinate.
GroupElement lift(const GroupElement& g);
// Commutator g^{-1} h^{-1} g h.
GroupElement commutator(const GroupElement& g, const GroupElement& h);
bool commutes(const GroupElement& g, const GroupElement& h);

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return multiply(g, h);
}

}  // namespace filiform

template <>
struct std::hash<filiform::GroupElement> {
  std::size_t operator()(const filiform::GroupElement& g) const noexcept { return g.hash(); }
};

#endif  // FILIFORM_CORE_ELEMENT_HPP
