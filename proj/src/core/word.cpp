#include "filiform/core/word.hpp"

#include <algorithm>
#include <utility>

#include "filiform/core/errors.hpp"

namespace filiform {

namespace {

void check_letter(std::size_t dim, Letter l) {
  if (l.generator > dim) {
    throw PreconditionViolation("letter a_" + std::to_string(l.generator) +
                                " does not exist in dimension " + std::to_string(dim));
  }
}

}  // namespace

Word::Word(std::size_t dim, std::vector<Letter> letters) : dim_(dim), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    check_letter(dim_, l);
  }
}

void Word::push_back(Letter l) {
  check_letter(dim_, l);
  letters_.push_back(l);
}

void Word::append_power(Letter l, std::size_t count) {
  check_letter(dim_, l);
  letters_.insert(letters_.end(), count, l);
}

void Word::append_power(Letter l, const BigInt& k) {
  if (k < 0) {
    append_power(l.inverted(), static_cast<std::size_t>(to_uint64(-k)));
  } else {
    append_power(l, static_cast<std::size_t>(to_uint64(k)));
  }
}

void Word::append(const Word& w) {
  if (w.dim_ != dim_) {
    throw DimensionMismatch(dim_, w.dim_);
  }
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::inverse() const {
  Word out(dim_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverted());
  }
  return out;
}

Word Word::with_dim(std::size_t new_dim) const { return Word(new_dim, letters_); }

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

GroupElement eval_word(const Word& w) {
  GroupElement g(w.dim());
  for (Letter l : w.letters()) {
    if (l.generator == 0) {
      g.mul_t(l.inverse);
    } else {
      g.mul_a(l.generator, l.inverse);
    }
  }
  return g;
}

}  // namespace filiform
