#include "filiform/core/text.hpp"

#include <cctype>
#include <vector>

#include "filiform/core/errors.hpp"

namespace filiform {

std::string format_element(const GroupElement& g) {
  std::string out = std::to_string(g.dim());
  out += "; ";
  out += to_string(g.t_exp());
  out += "; ";
  bool first = true;
  for (const auto& p : g.a_exps()) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += to_string(p);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    skip_space();
    if (at_end() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  BigInt integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits) {
      throw ParseError("expected integer", start);
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') {
      s.erase(0, 1);
    }
    return BigInt(s, 10);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupElement parse_element(std::string_view text) {
  Cursor c(text);
  BigInt d = c.integer();
  if (d < 1 || d > 4096) {
    throw ParseError("dimension must be in [1, 4096]", 0);
  }
  std::size_t dim = d.get_ui();
  c.expect(';');
  BigInt r = c.integer();
  c.expect(';');
  std::vector<BigInt> a;
  a.reserve(dim);
  a.push_back(c.integer());
  for (std::size_t i = 1; i < dim; ++i) {
    c.expect(',');
    a.push_back(c.integer());
  }
  c.skip_space();
  if (!c.at_end()) {
    throw ParseError("trailing characters (expected " + std::to_string(dim) + " exponents)",
                     c.pos());
  }
  return GroupElement(std::move(r), std::move(a));
}

std::string format_letter(Letter l) {
  if (l.generator == 0) {
    return l.inverse ? "T" : "t";
  }
  return (l.inverse ? "A" : "a") + std::to_string(l.generator);
}

std::string format_word(const Word& w) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += format_letter(l);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t dim) {
  Word w(dim);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    char head = text[pos++];
    if (head == 't' || head == 'T') {
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character after t", pos);
      }
      w.push_back(letter_t(head == 'T'));
      continue;
    }
    if (head != 'a' && head != 'A') {
      throw ParseError(std::string("unknown letter '") + head + "'", start);
    }
    std::size_t digits = pos;
    std::size_t index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = std::min<std::size_t>(index * 10 + static_cast<std::size_t>(text[pos] - '0'),
                                    dim + 1);
      ++pos;
    }
    if (pos == digits) {
      throw ParseError("generator a needs an index", pos);
    }
    if (index == 0 || index > dim) {
      throw ParseError("generator index out of range for dimension " + std::to_string(dim),
                       start);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("unexpected character in letter", pos);
    }
    w.push_back(letter_a(static_cast<std::uint32_t>(index), head == 'A'));
  }
  return w;
}

}  // namespace filiform
