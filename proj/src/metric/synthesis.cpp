#include "filiform/metric/synthesis.hpp"

#include "filiform/core/errors.hpp"
#include "filiform/metric/waring.hpp"

namespace filiform {

namespace {

// a_dim^p is also reachable letter by letter; small offsets are cheaper that
// way than through a commutator gadget.
Word central_correction(const BigInt& p, std::size_t dim) {
  Word gadget = central_power_word(p, dim);
  if (abs(p) < gadget.length()) {
    Word literal(dim);
    literal.append_power(letter_a(static_cast<std::uint32_t>(dim)), p);
    return literal;
  }
  return gadget;
}

}  // namespace

Word central_power_word(const BigInt& p, std::size_t dim) {
  if (dim == 0) {
    throw PreconditionViolation("central_power_word: dimension must be at least 1");
  }
  Word w(dim);
  if (p == 0) {
    return w;
  }
  if (p < 0) {
    return central_power_word(-p, dim).inverse();
  }
  if (dim == 1) {
    w.append_power(letter_a(1), p);
    return w;
  }
  auto d = static_cast<unsigned>(dim);
  for (const BigInt& k : waring_decompose(p, d)) {
    Word inner = central_correction(ipow(k, d - 1), dim - 1).with_dim(dim);
    w.append(inner.inverse());
    w.append_power(letter_t(), BigInt(-k));
    w.append(inner);
    w.append_power(letter_t(), k);
  }
  return w;
}

Word short_word(const GroupElement& g) {
  std::size_t dim = g.dim();
  if (dim == 1) {
    Word w(1);
    w.append_power(letter_t(), g.t_exp());
    w.append_power(letter_a(1), g.a(1));
    return w;
  }
  Word w = short_word(project(g)).with_dim(dim);
  BigInt produced = eval_word(w).a(dim);
  w.append(central_correction(g.a(dim) - produced, dim));
  return w;
}

}  // namespace filiform
