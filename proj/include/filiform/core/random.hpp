#ifndef FILIFORM_CORE_RANDOM_HPP
#define FILIFORM_CORE_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "filiform/core/element.hpp"
#include "filiform/core/word.hpp"

namespace filiform {

using Rng = std::mt19937_64;

// Uniform letters from the 2(dim + 1) signed generators.
Word random_word(std::size_t dim, std::size_t length, Rng& rng);

// Normal form with |r| <= bound and |p_i| <= bound^i, each uniform.
GroupElement random_element(std::size_t dim, std::int64_t bound, Rng& rng);

}  // namespace filiform

#endif  // FILIFORM_CORE_RANDOM_HPP
