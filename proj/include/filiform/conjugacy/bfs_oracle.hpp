#ifndef FILIFORM_CONJUGACY_BFS_ORACLE_HPP
#define FILIFORM_CONJUGACY_BFS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "filiform/core/element.hpp"
#include "filiform/metric/ball.hpp"

namespace filiform {

// Brute-force search: the first x in (length, normal form) order with
// x^{-1} u x = v among elements of length <= radius, or nullopt when none
// exists within the radius. Grows the ball only as far as needed.
std::optional<GroupElement> shortest_conjugator_bfs(const GroupElement& u, const GroupElement& v,
                                                    std::uint32_t radius,
                                                    const BallOptions& options = {});

// Same search over an existing ball; requires radius <= ball.radius().
std::optional<GroupElement> shortest_conjugator_bfs(const GroupElement& u, const GroupElement& v,
                                                    std::uint32_t radius, const BallCache& ball);

// Every conjugate x^{-1} u x for x in a ball, mapped to the first such x in
// ball order. Answers many shortest-conjugator queries for a fixed u.
class ConjugatorIndex {
 public:
  ConjugatorIndex(const GroupElement& u, const BallCache& ball, std::uint32_t radius);

  std::optional<GroupElement> shortest_conjugator(const GroupElement& v) const;
  std::size_t size() const noexcept { return first_.size(); }

 private:
  const BallCache* ball_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> first_;
};

}  // namespace filiform

#endif  // FILIFORM_CONJUGACY_BFS_ORACLE_HPP
