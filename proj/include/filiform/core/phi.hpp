#ifndef FILIFORM_CORE_PHI_HPP
#define FILIFORM_CORE_PHI_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "filiform/core/bigint.hpp"

namespace filiform {

// phi^m acting on exponent vectors of Z^d: lower unitriangular with
// entry(j, i) = C(m, j - i) (0-based row j, column i).
class PhiMatrix {
 public:
  PhiMatrix(std::size_t dim, BigInt power, std::vector<BigInt> entries);

  std::size_t dim() const noexcept { return dim_; }
  const BigInt& power() const noexcept { return power_; }
  const BigInt& entry(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  std::vector<BigInt> apply(std::span<const BigInt> v) const;

  // Plain matrix product; used to check the composition law.
  friend PhiMatrix operator*(const PhiMatrix& a, const PhiMatrix& b);
  friend bool operator==(const PhiMatrix&, const PhiMatrix&) = default;

 private:
  std::size_t dim_;
  BigInt power_;
  std::vector<BigInt> entries_;
};

// Requires dim >= 1.
PhiMatrix phi_pow(std::size_t dim, const BigInt& m);

// Bottom-row entry of phi^m in column i (1-based), i.e. C(m, dim - i).
// Requires 1 <= i <= dim - 1.
BigInt epsilon(std::size_t dim, std::size_t i, const BigInt& m);

// v <- phi^m v without forming the matrix.
void apply_phi_power(std::span<BigInt> v, const BigInt& m);

// An integer E with |C(m, k)| <= E |m|^k for all m and 1 <= k <= dim-1;
// E = max_k ceil(k^k / k!). Zero when dim == 1.
BigInt epsilon_bound(std::size_t dim);

}  // namespace filiform

#endif  // FILIFORM_CORE_PHI_HPP
