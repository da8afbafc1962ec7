#ifndef FILIFORM_CORE_TEXT_HPP
#define FILIFORM_CORE_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "filiform/core/element.hpp"
#include "filiform/core/word.hpp"

namespace filiform {

// Canonical element text: "d; r; p1,p2,...,pd" (signed decimal).
std::string format_element(const GroupElement& g);
GroupElement parse_element(std::string_view text);

// Canonical word text: whitespace-separated letters "t T a1 A1 a2 ...",
// uppercase denoting the inverse. The empty word formats as "".
std::string format_word(const Word& w);
Word parse_word(std::string_view text, std::size_t dim);

std::string format_letter(Letter l);

}  // namespace filiform

#endif  // FILIFORM_CORE_TEXT_HPP
