#include "filiform/core/phi.hpp"

#include <utility>

#include "filiform/core/errors.hpp"

namespace filiform {

namespace {

std::vector<BigInt> binomial_row(const BigInt& m, std::size_t count) {
  std::vector<BigInt> c(count);
  if (count == 0) {
    return c;
  }
  c[0] = 1;
  for (std::size_t k = 1; k < count; ++k) {
    c[k] = c[k - 1] * (m - static_cast<unsigned long>(k - 1));
    mpz_divexact_ui(c[k].get_mpz_t(), c[k].get_mpz_t(), k);
  }
  return c;
}

}  // namespace

PhiMatrix::PhiMatrix(std::size_t dim, BigInt power, std::vector<BigInt> entries)
    : dim_(dim), power_(std::move(power)), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw PreconditionViolation("PhiMatrix: entry count does not match dimension");
  }
}

std::vector<BigInt> PhiMatrix::apply(std::span<const BigInt> v) const {
  if (v.size() != dim_) {
    throw DimensionMismatch(dim_, v.size());
  }
  std::vector<BigInt> out(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      out[j] += entry(j, i) * v[i];
    }
  }
  return out;
}

PhiMatrix operator*(const PhiMatrix& a, const PhiMatrix& b) {
  if (a.dim_ != b.dim_) {
    throw DimensionMismatch(a.dim_, b.dim_);
  }
  std::size_t d = a.dim_;
  std::vector<BigInt> e(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      BigInt s = 0;
      for (std::size_t k = 0; k < d; ++k) {
        s += a.entry(j, k) * b.entry(k, i);
      }
      e[j * d + i] = std::move(s);
    }
  }
  return PhiMatrix(d, a.power_ + b.power_, std::move(e));
}

PhiMatrix phi_pow(std::size_t dim, const BigInt& m) {
  if (dim == 0) {
    throw PreconditionViolation("phi_pow: dimension must be at least 1");
  }
  std::vector<BigInt> c = binomial_row(m, dim);
  std::vector<BigInt> e(dim * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      e[j * dim + i] = c[j - i];
    }
  }
  return PhiMatrix(dim, m, std::move(e));
}

BigInt epsilon(std::size_t dim, std::size_t i, const BigInt& m) {
  if (i < 1 || i + 1 > dim) {
    throw PreconditionViolation("epsilon: index " + std::to_string(i) + " outside [1, " +
                                std::to_string(dim) + "-1]");
  }
  return binomial(m, static_cast<unsigned>(dim - i));
}

void apply_phi_power(std::span<BigInt> v, const BigInt& m) {
  if (m == 0 || v.size() < 2) {
    return;
  }
  std::size_t d = v.size();
  if (m == 1) {
    for (std::size_t j = d - 1; j > 0; --j) {
      v[j] += v[j - 1];
    }
    return;
  }
  if (m == -1) {
    for (std::size_t j = 1; j < d; ++j) {
      v[j] -= v[j - 1];
    }
    return;
  }
  std::vector<BigInt> c = binomial_row(m, d);
  // Descending rows so lower-index inputs are still unmodified.
  for (std::size_t j = d - 1; j > 0; --j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (v[i] != 0) {
        v[j] += c[j - i] * v[i];
      }
    }
  }
}

BigInt epsilon_bound(std::size_t dim) {
  BigInt best = 0;
  BigInt factorial = 1;
  for (std::size_t k = 1; k + 1 <= dim; ++k) {
    factorial *= static_cast<unsigned long>(k);
    BigInt kk = ipow(BigInt(static_cast<unsigned long>(k)), static_cast<unsigned>(k));
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), kk.get_mpz_t(), factorial.get_mpz_t());
    if (q > best) {
      best = q;
    }
  }
  return best;
}

}  // namespace filiform
