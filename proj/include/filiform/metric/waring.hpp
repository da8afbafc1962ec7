#ifndef FILIFORM_METRIC_WARING_HPP
#define FILIFORM_METRIC_WARING_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "filiform/core/bigint.hpp"

namespace filiform {

// Values up to this bound are decomposed with the minimum number of parts.
// Larger values first shed greedy largest k-th powers until the remainder
// falls below it. Squares use the sum-of-squares theorems instead of a
// table, which keeps them exact up to a much larger bound.
inline constexpr std::uint64_t kWaringExactLimit = 10'000'000;
inline constexpr std::uint64_t kSquaresExactLimit = 1'000'000'000'000;

// Returns bases (k_1 >= k_2 >= ... >= k_m >= 1) with sum k_i^k = p.
// Requires p >= 1 and k >= 1.
//
// k = 1 gives (p). k = 2 uses the sum-of-squares theorems (one, two, three or
// four squares) to pick a minimal decomposition directly. k >= 3 uses a
// lazily extended dynamic-programming table; ties prefer the larger base.
std::vector<BigInt> waring_decompose(const BigInt& p, unsigned k);

// The classical Waring number g(k) = 2^k + floor((3/2)^k) - 2: every positive
// integer is a sum of at most g(k) k-th powers.
std::uint64_t waring_classical_bound(unsigned k);

// Largest part count returned by waring_decompose for exponent k so far in
// this process (0 if never called with k).
std::uint64_t waring_max_parts_observed(unsigned k);

}  // namespace filiform

#endif  // FILIFORM_METRIC_WARING_HPP
