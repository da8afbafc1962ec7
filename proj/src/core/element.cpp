#include "filiform/core/element.hpp"

#include <utility>

#include "filiform/core/errors.hpp"
#include "filiform/core/phi.hpp"

namespace filiform {

GroupElement::GroupElement(std::size_t dim) : t_exp_(0), a_exps_(dim) {
  if (dim == 0) {
    throw PreconditionViolation("group dimension must be at least 1");
  }
}

GroupElement::GroupElement(BigInt t_exp, std::vector<BigInt> a_exps)
    : t_exp_(std::move(t_exp)), a_exps_(std::move(a_exps)) {
  if (a_exps_.empty()) {
    throw PreconditionViolation("group dimension must be at least 1");
  }
}

GroupElement GroupElement::t_power(std::size_t dim, const BigInt& k) {
  GroupElement g(dim);
  g.t_exp_ = k;
  return g;
}

GroupElement GroupElement::a_power(std::size_t dim, std::size_t i, const BigInt& k) {
  if (i == 0 || i > dim) {
    throw PreconditionViolation("generator index a_" + std::to_string(i) + " out of range");
  }
  GroupElement g(dim);
  g.a_exps_[i - 1] = k;
  return g;
}

GroupElement GroupElement::generator(std::size_t dim, std::size_t index, bool inverse) {
  BigInt k = inverse ? -1 : 1;
  return index == 0 ? t_power(dim, k) : a_power(dim, index, k);
}

const BigInt& GroupElement::a(std::size_t i) const {
  if (i == 0 || i > dim()) {
    throw PreconditionViolation("generator index a_" + std::to_string(i) + " out of range");
  }
  return a_exps_[i - 1];
}

bool GroupElement::is_identity() const {
  if (t_exp_ != 0) {
    return false;
  }
  for (const auto& p : a_exps_) {
    if (p != 0) {
      return false;
    }
  }
  return true;
}

bool GroupElement::is_central() const {
  if (t_exp_ != 0) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < a_exps_.size(); ++i) {
    if (a_exps_[i] != 0) {
      return false;
    }
  }
  return true;
}

void GroupElement::mul_t(bool inverse) {
  // (t^r a^p) t = t^{r+1} phi(a^p); phi adds p_{j-1} to p_j.
  std::size_t d = a_exps_.size();
  if (!inverse) {
    for (std::size_t j = d - 1; j > 0; --j) {
      a_exps_[j] += a_exps_[j - 1];
    }
    ++t_exp_;
  } else {
    for (std::size_t j = 1; j < d; ++j) {
      a_exps_[j] -= a_exps_[j - 1];
    }
    --t_exp_;
  }
}

void GroupElement::mul_a(std::size_t i, bool inverse) {
  BigInt& p = a_exps_.at(i - 1);
  if (inverse) {
    --p;
  } else {
    ++p;
  }
}

std::strong_ordering operator<=>(const GroupElement& g, const GroupElement& h) {
  if (auto c = g.dim() <=> h.dim(); c != 0) {
    return c;
  }
  if (auto c = compare(g.t_exp_, h.t_exp_); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < g.a_exps_.size(); ++i) {
    if (auto c = compare(g.a_exps_[i], h.a_exps_[i]); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t GroupElement::hash() const noexcept {
  std::size_t h = hash_value(t_exp_);
  for (const auto& p : a_exps_) {
    h = h * 1000003u ^ hash_value(p);
  }
  return h;
}

namespace {

void require_same_dim(const GroupElement& g, const GroupElement& h) {
  if (g.dim() != h.dim()) {
    throw DimensionMismatch(g.dim(), h.dim());
  }
}

}  // namespace

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_dim(g, h);
  std::vector<BigInt> a(g.a_exps().begin(), g.a_exps().end());
  apply_phi_power(a, h.t_exp());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += h.a_exps()[i];
  }
  return GroupElement(g.t_exp() + h.t_exp(), std::move(a));
}

GroupElement invert(const GroupElement& g) {
  std::vector<BigInt> a(g.a_exps().begin(), g.a_exps().end());
  apply_phi_power(a, -g.t_exp());
  for (auto& x : a) {
    x = -x;
  }
  return GroupElement(-g.t_exp(), std::move(a));
}

GroupElement power(const GroupElement& g, const BigInt& n) {
  if (n < 0) {
    return power(invert(g), -n);
  }
  GroupElement result(g.dim());
  GroupElement base = g;
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(n.get_mpz_t(), b)) {
      result = multiply(result, base);
    }
    if (b + 1 < bits) {
      base = multiply(base, base);
    }
  }
  return result;
}

GroupElement project(const GroupElement& g) {
  if (g.dim() < 2) {
    throw PreconditionViolation("project requires dimension >= 2");
  }
  std::vector<BigInt> a(g.a_exps().begin(), g.a_exps().end() - 1);
  return GroupElement(g.t_exp(), std::move(a));
}

GroupElement lift(const GroupElement& g) {
  std::vector<BigInt> a(g.a_exps().begin(), g.a_exps().end());
  a.emplace_back(0);
  return GroupElement(g.t_exp(), std::move(a));
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(invert(g), invert(h)), multiply(g, h));
}

bool commutes(const GroupElement& g, const GroupElement& h) {
  return multiply(g, h) == multiply(h, g);
}

}  // namespace filiform
