#ifndef FILIFORM_METRIC_BALL_HPP
#define FILIFORM_METRIC_BALL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "filiform/core/element.hpp"

namespace filiform {

struct BallOptions {
  std::size_t memory_cap_bytes = std::size_t{2} << 30;
  unsigned threads = 1;
};

// Rough resident size of one ball entry, used to enforce the memory cap.
std::size_t approx_entry_bytes(std::size_t dim);

// Exact word lengths for every element of G_dim within `radius` of the
// identity, with respect to {t^{+-1}, a_1^{+-1}, ..., a_dim^{+-1}}.
//
// Elements are stored sorted by (distance, normal form), so the ordering is a
// function of (dim, radius) alone. Read-only after construction.
class BallCache {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::optional<std::uint32_t> distance(const GroupElement& g) const;
  std::optional<std::size_t> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_.contains(g); }

  std::span<const GroupElement> elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t index) const { return elements_.at(index); }
  std::uint32_t distance_at(std::size_t index) const;
  // Elements at distance exactly k, k <= radius.
  std::span<const GroupElement> sphere(std::uint32_t k) const;

  // Rebuilds a cache from (element, distance) records, e.g. read from disk.
  // Records must be in canonical order and describe a complete ball.
  static BallCache from_records(std::size_t dim, std::uint32_t radius,
                                std::vector<GroupElement> elements,
                                std::span<const std::uint32_t> distances);

 private:
  friend class BallBuilder;
  explicit BallCache(std::size_t dim);

  std::size_t dim_;
  std::uint32_t radius_ = 0;
  std::vector<GroupElement> elements_;
  // layer_start_[k] = index of the first element at distance k; one sentinel.
  std::vector<std::size_t> layer_start_;
  std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> index_;
};

// Grows a ball one breadth-first layer at a time. Each layer's frontier can
// be split across worker threads; the merged layer is sorted before it is
// committed, so the result does not depend on the thread count.
class BallBuilder {
 public:
  BallBuilder(std::size_t dim, BallOptions options = {});
  explicit BallBuilder(BallCache seed, BallOptions options = {});

  const BallCache& ball() const noexcept { return ball_; }
  // Throws MemoryCapExceeded, leaving the ball at its previous radius.
  void grow();
  void grow_to(std::uint32_t radius);
  BallCache take() && { return std::move(ball_); }

 private:
  BallCache ball_;
  BallOptions options_;
};

BallCache enumerate_ball(std::size_t dim, std::uint32_t radius, const BallOptions& options = {});

}  // namespace filiform

#endif  // FILIFORM_METRIC_BALL_HPP
