#include "filiform/conjugacy/bfs_oracle.hpp"

#include "filiform/conjugacy/solver.hpp"
#include "filiform/core/errors.hpp"

namespace filiform {

namespace {

std::optional<GroupElement> scan(const GroupElement& u, const GroupElement& v,
                                 std::span<const GroupElement> candidates) {
  for (const GroupElement& x : candidates) {
    if (conjugate(u, x) == v) {
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<GroupElement> shortest_conjugator_bfs(const GroupElement& u, const GroupElement& v,
                                                    std::uint32_t radius,
                                                    const BallOptions& options) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch(u.dim(), v.dim());
  }
  BallBuilder builder(u.dim(), options);
  for (std::uint32_t k = 0;; ++k) {
    if (auto x = scan(u, v, builder.ball().sphere(k))) {
      return x;
    }
    if (k == radius) {
      return std::nullopt;
    }
    builder.grow();
  }
}

std::optional<GroupElement> shortest_conjugator_bfs(const GroupElement& u, const GroupElement& v,
                                                    std::uint32_t radius, const BallCache& ball) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch(u.dim(), v.dim());
  }
  if (u.dim() != ball.dim()) {
    throw DimensionMismatch(u.dim(), ball.dim());
  }
  if (radius > ball.radius()) {
    throw PreconditionViolation("shortest_conjugator_bfs: radius exceeds ball radius");
  }
  for (std::uint32_t k = 0; k <= radius; ++k) {
    if (auto x = scan(u, v, ball.sphere(k))) {
      return x;
    }
  }
  return std::nullopt;
}

ConjugatorIndex::ConjugatorIndex(const GroupElement& u, const BallCache& ball,
                                 std::uint32_t radius)
    : ball_(&ball) {
  if (u.dim() != ball.dim()) {
    throw DimensionMismatch(u.dim(), ball.dim());
  }
  if (radius > ball.radius()) {
    throw PreconditionViolation("ConjugatorIndex: radius exceeds ball radius");
  }
  std::size_t end = radius == ball.radius()
                        ? ball.size()
                        : static_cast<std::size_t>(ball.sphere(radius + 1).data() -
                                                   ball.elements().data());
  for (std::size_t i = 0; i < end; ++i) {
    first_.try_emplace(conjugate(u, ball.element(i)), i);
  }
}

std::optional<GroupElement> ConjugatorIndex::shortest_conjugator(const GroupElement& v) const {
  auto it = first_.find(v);
  if (it == first_.end()) {
    return std::nullopt;
  }
  return ball_->element(it->second);
}

}  // namespace filiform
