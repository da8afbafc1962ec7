#include "filiform/metric/distance.hpp"

#include <utility>

#include "filiform/core/errors.hpp"

namespace filiform {

BigInt size_lower_bound(const GroupElement& g) {
  BigInt best = abs(g.t_exp());
  for (std::size_t i = 1; i <= g.dim(); ++i) {
    BigInt root = iroot_ceil(abs(g.a(i)), static_cast<unsigned>(i));
    if (root > best) {
      best = root;
    }
  }
  return best;
}

std::uint32_t DistanceResult::value() const {
  if (!found_) {
    throw PreconditionViolation("distance not found within radius");
  }
  return value_;
}

DistanceOracle::DistanceOracle(std::size_t dim, BallOptions options) : builder_(dim, options) {}

DistanceOracle::DistanceOracle(BallCache ball, BallOptions options)
    : builder_(std::move(ball), options) {}

DistanceResult DistanceOracle::exact_distance(const GroupElement& g, std::uint32_t max_radius) {
  if (g.dim() != ball().dim()) {
    throw DimensionMismatch(g.dim(), ball().dim());
  }
  if (auto d = ball().distance(g)) {
    if (*d <= max_radius) {
      return DistanceResult::exact(*d);
    }
    return DistanceResult::radius_exceeded(max_radius + 1);
  }
  if (size_lower_bound(g) > max_radius) {
    return DistanceResult::radius_exceeded(max_radius + 1);
  }
  while (ball().radius() < max_radius) {
    builder_.grow();
    if (auto d = ball().distance(g)) {
      return DistanceResult::exact(*d);
    }
  }
  return DistanceResult::radius_exceeded(max_radius + 1);
}

DistanceResult exact_distance(const GroupElement& g, std::uint32_t max_radius,
                              const BallOptions& options) {
  DistanceOracle oracle(g.dim(), options);
  return oracle.exact_distance(g, max_radius);
}

}  // namespace filiform
