#include "filiform/conjugacy/solver.hpp"

#include <algorithm>

#include "filiform/core/errors.hpp"
#include "filiform/core/phi.hpp"
#include "filiform/metric/synthesis.hpp"
#include "filiform/structure/bezout.hpp"
#include "filiform/structure/zeta.hpp"

namespace filiform {

GroupElement conjugate(const GroupElement& g, const GroupElement& x) {
  return multiply(multiply(invert(x), g), x);
}

std::string_view to_string(StageKind kind) {
  switch (kind) {
    case StageKind::Equality:
      return "equality";
    case StageKind::Lattice:
      return "lattice";
    case StageKind::CentralCorrection:
      return "central-correction";
  }
  return "unknown";
}

namespace {

StageRecord stage(std::size_t level, StageKind kind, const BigInt& t_power = 0) {
  StageRecord r;
  r.level = level;
  r.kind = kind;
  r.t_power = t_power;
  return r;
}

void require_same_dim(const GroupElement& u, const GroupElement& v) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch(u.dim(), v.dim());
  }
}

std::optional<BigInt> lattice_power(const GroupElement& u, const GroupElement& v) {
  if (u == v) {
    return BigInt(0);
  }
  std::size_t dim = u.dim();
  std::size_t lead = 0;
  while (lead < dim && u.a_exps()[lead] == 0) {
    ++lead;
  }
  // Identity and central elements are fixed by every conjugation.
  if (lead + 1 >= dim) {
    return std::nullopt;
  }
  // phi^m(u)_{lead+1} = u_{lead+1} + m u_lead
  BigInt diff = v.a_exps()[lead + 1] - u.a_exps()[lead + 1];
  if (!divides(u.a_exps()[lead], diff)) {
    return std::nullopt;
  }
  BigInt m = diff / u.a_exps()[lead];
  std::vector<BigInt> image(u.a_exps().begin(), u.a_exps().end());
  apply_phi_power(image, m);
  if (!std::equal(image.begin(), image.end(), v.a_exps().begin())) {
    return std::nullopt;
  }
  return m;
}

std::optional<GroupElement> solve_recursive(const GroupElement& u, const GroupElement& v,
                                            std::vector<StageRecord>* log) {
  std::size_t dim = u.dim();
  if (dim == 1) {
    if (log) {
      log->push_back(stage(1, StageKind::Equality));
    }
    return u == v ? std::optional<GroupElement>(GroupElement(1)) : std::nullopt;
  }
  if (u.t_exp() != v.t_exp()) {
    return std::nullopt;
  }
  if (u.in_lattice()) {
    auto m = lattice_power(u, v);
    if (!m) {
      return std::nullopt;
    }
    if (log) {
      log->push_back(stage(dim, StageKind::Lattice, *m));
    }
    return GroupElement::t_power(dim, *m);
  }
  auto lower = solve_recursive(project(u), project(v), log);
  if (!lower) {
    return std::nullopt;
  }
  GroupElement w = lift(*lower);
  GroupElement moved = conjugate(u, w);
  if (project(moved) != project(v)) {
    throw InternalError("solve_conjugacy: lifted conjugator fails in the quotient");
  }
  // w^{-1} u w = v a_dim^ell, so the correction must send v to v a_dim^{-ell}.
  BigInt ell = moved.a(dim) - v.a(dim);
  StageRecord record = stage(dim, StageKind::CentralCorrection);
  auto z = solve_central_discrepancy(v, BigInt(-ell), &record);
  if (!z) {
    return std::nullopt;
  }
  if (log) {
    log->push_back(std::move(record));
  }
  return multiply(w, *z);
}

}  // namespace

std::optional<ConjugacyWitness> solve_in_lattice(const GroupElement& u, const GroupElement& v) {
  require_same_dim(u, v);
  if (!u.in_lattice() || !v.in_lattice()) {
    throw PreconditionViolation("solve_in_lattice: both elements must have zero t-exponent");
  }
  auto m = lattice_power(u, v);
  if (!m) {
    return std::nullopt;
  }
  ConjugacyWitness w{GroupElement::t_power(u.dim(), *m), Word(u.dim()), 0, 0, {}};
  if (conjugate(u, w.conjugator) != v) {
    throw InternalError("solve_in_lattice: witness does not verify");
  }
  w.word = short_word(w.conjugator);
  w.word_length = w.word.length();
  w.input_size = std::max(short_word(u).length(), short_word(v).length());
  w.stage_log.push_back(stage(u.dim(), StageKind::Lattice, *m));
  return w;
}

std::optional<GroupElement> solve_central_discrepancy(const GroupElement& gamma, const BigInt& ell,
                                                      StageRecord* record) {
  std::size_t dim = gamma.dim();
  if (dim < 2) {
    throw PreconditionViolation("solve_central_discrepancy: dimension must be at least 2");
  }
  if (gamma.in_lattice()) {
    throw PreconditionViolation("solve_central_discrepancy: gamma must have nonzero t-exponent");
  }
  if (record) {
    record->level = dim;
    record->kind = StageKind::CentralCorrection;
    record->ell = ell;
  }
  if (ell == 0) {
    return GroupElement(dim);
  }
  GroupElement image = project(gamma);
  ZetaData data = zeta_image(image);
  if (!divides(data.image_generator, ell)) {
    return std::nullopt;
  }
  std::size_t k = dim - 1;
  BigInt reduced = ell / data.q;  // = M p + rho e
  BigInt M = floor_div(reduced, data.p);
  BigInt rho = (reduced - M * data.p) / data.e;

  BigInt lambda = 0;
  BigInt mu = 0;
  GroupElement y = GroupElement::a_power(k, k, BigInt(-M));
  if (rho != 0) {
    if (data.r == data.e) {
      // r | p: zeta(g_0) = r q already generates the image.
      lambda = 1;
    } else {
      BezoutPair bp = bezout_bounded(data.r, data.p);
      lambda = bp.lambda;
      mu = bp.mu;
    }
    GroupElement step =
        multiply(power(data.base, lambda), GroupElement::a_power(k, k, mu));
    y = multiply(y, power(step, rho));
  }
  if (record) {
    record->M = M;
    record->rho = rho;
    record->lambda = lambda;
    record->mu = mu;
  }
  GroupElement z = lift(y);
  GroupElement target = multiply(gamma, GroupElement::a_power(dim, dim, ell));
  if (conjugate(gamma, z) != target) {
    throw InternalError("solve_central_discrepancy: correction does not verify");
  }
  return z;
}

std::optional<GroupElement> find_conjugator(const GroupElement& u, const GroupElement& v,
                                            std::vector<StageRecord>* log) {
  require_same_dim(u, v);
  auto x = solve_recursive(u, v, log);
  if (x && conjugate(u, *x) != v) {
    throw InternalError("solve_conjugacy: witness does not verify");
  }
  return x;
}

std::optional<ConjugacyWitness> solve_conjugacy(const GroupElement& u, const GroupElement& v) {
  std::vector<StageRecord> log;
  auto x = find_conjugator(u, v, &log);
  if (!x) {
    return std::nullopt;
  }
  ConjugacyWitness w{*x, short_word(*x), 0, 0, std::move(log)};
  w.word_length = w.word.length();
  w.input_size = std::max(short_word(u).length(), short_word(v).length());
  return w;
}

}  // namespace filiform
