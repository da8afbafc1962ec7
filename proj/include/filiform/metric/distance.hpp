#ifndef FILIFORM_METRIC_DISTANCE_HPP
#define FILIFORM_METRIC_DISTANCE_HPP

#include <cstdint>
#include <optional>

#include "filiform/core/element.hpp"
#include "filiform/metric/ball.hpp"

namespace filiform {

// max(|r|, max_i ceil(|p_i|^{1/i})): any word for g has at least this many
// letters, since a word of length n has |r| <= n and |p_i| <= n^i.
BigInt size_lower_bound(const GroupElement& g);

// Either the exact word length, or a certified lower bound when the element
// lies outside the searched radius.
class DistanceResult {
 public:
  static DistanceResult exact(std::uint32_t d) { return DistanceResult(d, true); }
  static DistanceResult radius_exceeded(std::uint32_t lower) { return DistanceResult(lower, false); }

  bool found() const noexcept { return found_; }
  // Requires found().
  std::uint32_t value() const;
  // Equals value() when found, else max_radius + 1.
  std::uint32_t lower_bound() const noexcept { return value_; }

 private:
  DistanceResult(std::uint32_t v, bool found) : value_(v), found_(found) {}
  std::uint32_t value_;
  bool found_;
};

// Answers exact-distance queries from a ball that is grown on demand.
class DistanceOracle {
 public:
  explicit DistanceOracle(std::size_t dim, BallOptions options = {});
  explicit DistanceOracle(BallCache ball, BallOptions options = {});

  DistanceResult exact_distance(const GroupElement& g, std::uint32_t max_radius);
  const BallCache& ball() const noexcept { return builder_.ball(); }

 private:
  BallBuilder builder_;
};

// One-shot query; enumerates only as far as needed.
DistanceResult exact_distance(const GroupElement& g, std::uint32_t max_radius,
                              const BallOptions& options = {});

}  // namespace filiform

#endif  // FILIFORM_METRIC_DISTANCE_HPP
