#ifndef FILIFORM_CORE_WORD_HPP
#define FILIFORM_CORE_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "filiform/core/element.hpp"

namespace filiform {

// A signed generator letter: generator 0 is t, generator i >= 1 is a_i.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return Letter{generator, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline constexpr Letter letter_t(bool inverse = false) { return Letter{0, inverse}; }
inline constexpr Letter letter_a(std::uint32_t i, bool inverse = false) { return Letter{i, inverse}; }

// A word over {t, a_1, ..., a_dim} and their inverses.
class Word {
 public:
  explicit Word(std::size_t dim) : dim_(dim) {}
  Word(std::size_t dim, std::vector<Letter> letters);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter l);
  // Appends `count` copies of l.
  void append_power(Letter l, std::size_t count);
  // Appends l^k, using the inverse letter when k < 0.
  void append_power(Letter l, const BigInt& k);
  void append(const Word& w);

  // Formal inverse: reversed, each letter inverted.
  Word inverse() const;
  // The same letters read in G_new_dim; requires every letter to exist there.
  Word with_dim(std::size_t new_dim) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t dim_;
  std::vector<Letter> letters_;
};

Word operator+(Word lhs, const Word& rhs);

// Left-to-right product of the letters in G_dim.
GroupElement eval_word(const Word& w);

}  // namespace filiform

#endif  // FILIFORM_CORE_WORD_HPP
