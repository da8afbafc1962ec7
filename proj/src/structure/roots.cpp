#include "filiform/structure/roots.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "filiform/core/errors.hpp"

namespace filiform {

namespace {

std::vector<std::uint64_t> divisors_descending(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i != n / i) {
        large.push_back(n / i);
      }
    }
  }
  std::vector<std::uint64_t> out(large.begin(), large.end());
  out.insert(out.end(), small.rbegin(), small.rend());
  return out;
}

}  // namespace

std::optional<GroupElement> root_exact(const GroupElement& g, const BigInt& p) {
  if (p < 1) {
    throw PreconditionViolation("root_exact: exponent must be positive");
  }
  if (p == 1) {
    return g;
  }
  std::size_t dim = g.dim();
  if (dim == 1) {
    if (!divides(p, g.t_exp()) || !divides(p, g.a(1))) {
      return std::nullopt;
    }
    return GroupElement(BigInt(g.t_exp() / p), {BigInt(g.a(1) / p)});
  }
  auto lower = root_exact(project(g), p);
  if (!lower) {
    return std::nullopt;
  }
  GroupElement h0 = lift(*lower);
  BigInt s = power(h0, p).a(dim) - g.a(dim);
  if (!divides(p, s)) {
    return std::nullopt;
  }
  return multiply(h0, GroupElement::a_power(dim, dim, BigInt(-s / p)));
}

RootDecomposition max_root_mod_center(const GroupElement& g) {
  if (g.in_lattice()) {
    throw PreconditionViolation("max_root_mod_center: t-exponent must be nonzero");
  }
  std::size_t dim = g.dim();
  BigInt t_abs = abs(g.t_exp());
  if (dim == 1) {
    BigInt offset = floor_mod(g.a(1), t_abs);
    BigInt base_a = floor_div(g.a(1), t_abs);
    return RootDecomposition{GroupElement(BigInt(sgn(g.t_exp())), {base_a}), t_abs, offset};
  }
  GroupElement image = project(g);
  for (std::uint64_t candidate : divisors_descending(to_uint64(t_abs))) {
    BigInt p = from_uint64(candidate);
    auto lower = root_exact(image, p);
    if (!lower) {
      continue;
    }
    GroupElement h0 = lift(*lower);
    // g = h0^p a_dim^{offset}
    BigInt offset = g.a(dim) - power(h0, p).a(dim);
    BigInt shift = floor_div(offset, p);
    BigInt r = offset - shift * p;
    GroupElement base = multiply(h0, GroupElement::a_power(dim, dim, shift));
    return RootDecomposition{std::move(base), std::move(p), std::move(r)};
  }
  throw InternalError("max_root_mod_center: p = 1 always admits a root");
}

}  // namespace filiform
