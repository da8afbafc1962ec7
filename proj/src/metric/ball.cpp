#include "filiform/metric/ball.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "filiform/core/errors.hpp"

namespace filiform {

std::size_t approx_entry_bytes(std::size_t dim) {
  // vector slot + hash node + one heap limb per coordinate.
  return sizeof(GroupElement) + 64 + (dim + 1) * (sizeof(BigInt) + 16) +
         sizeof(std::size_t) * 2;
}

BallCache::BallCache(std::size_t dim) : dim_(dim) {
  elements_.emplace_back(dim);
  index_.emplace(elements_.front(), 0);
  layer_start_ = {0, 1};
}

std::optional<std::uint32_t> BallCache::distance(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return distance_at(it->second);
}

std::optional<std::size_t> BallCache::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::uint32_t BallCache::distance_at(std::size_t index) const {
  if (index >= elements_.size()) {
    throw PreconditionViolation("ball index out of range");
  }
  auto it = std::upper_bound(layer_start_.begin(), layer_start_.end(), index);
  return static_cast<std::uint32_t>(it - layer_start_.begin() - 1);
}

std::span<const GroupElement> BallCache::sphere(std::uint32_t k) const {
  if (k > radius_) {
    throw PreconditionViolation("sphere radius beyond ball radius");
  }
  return std::span<const GroupElement>(elements_).subspan(
      layer_start_[k], layer_start_[k + 1] - layer_start_[k]);
}

BallCache BallCache::from_records(std::size_t dim, std::uint32_t radius,
                                  std::vector<GroupElement> elements,
                                  std::span<const std::uint32_t> distances) {
  if (elements.size() != distances.size() || elements.empty()) {
    throw CacheFormatError("ball records: element and distance counts differ or are empty");
  }
  BallCache ball(dim);
  ball.radius_ = radius;
  ball.elements_ = std::move(elements);
  ball.index_.clear();
  ball.index_.reserve(ball.elements_.size());
  ball.layer_start_.assign(1, 0);
  std::uint32_t layer = 0;
  for (std::size_t i = 0; i < ball.elements_.size(); ++i) {
    const GroupElement& g = ball.elements_[i];
    if (g.dim() != dim) {
      throw CacheFormatError("ball records: element of wrong dimension");
    }
    if (distances[i] > radius) {
      throw CacheFormatError("ball records: distance beyond radius");
    }
    if (i > 0) {
      bool ordered = distances[i] > distances[i - 1] ||
                     (distances[i] == distances[i - 1] && ball.elements_[i - 1] < g);
      if (!ordered) {
        throw CacheFormatError("ball records: not in canonical order");
      }
    }
    while (layer < distances[i]) {
      ball.layer_start_.push_back(i);
      ++layer;
    }
    ball.index_.emplace(g, static_cast<std::uint32_t>(i));
  }
  while (layer <= radius) {
    ball.layer_start_.push_back(ball.elements_.size());
    ++layer;
  }
  if (!ball.elements_.front().is_identity() || ball.layer_start_[1] != 1) {
    throw CacheFormatError("ball records: first record must be the identity alone at distance 0");
  }
  for (std::uint32_t k = 1; k <= radius; ++k) {
    if (ball.layer_start_[k + 1] == ball.layer_start_[k]) {
      throw CacheFormatError("ball records: empty sphere");
    }
  }
  return ball;
}

BallBuilder::BallBuilder(std::size_t dim, BallOptions options)
    : ball_(dim), options_(options) {}

BallBuilder::BallBuilder(BallCache seed, BallOptions options)
    : ball_(std::move(seed)), options_(options) {}

namespace {

void expand_range(const BallCache& ball, std::span<const GroupElement> frontier,
                  std::vector<GroupElement>& out) {
  std::size_t dim = ball.dim();
  for (const GroupElement& g : frontier) {
    for (std::size_t gen = 0; gen <= dim; ++gen) {
      for (bool inv : {false, true}) {
        GroupElement h = g;
        if (gen == 0) {
          h.mul_t(inv);
        } else {
          h.mul_a(gen, inv);
        }
        if (!ball.contains(h)) {
          out.push_back(std::move(h));
        }
      }
    }
  }
}

}  // namespace

void BallBuilder::grow() {
  std::span<const GroupElement> frontier = ball_.sphere(ball_.radius_);
  unsigned workers = std::max(1u, options_.threads);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, frontier.size()));
  std::vector<std::vector<GroupElement>> parts(std::max(1u, workers));

  if (workers <= 1) {
    expand_range(ball_, frontier, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (frontier.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = std::min(frontier.size(), w * chunk);
      std::size_t end = std::min(frontier.size(), begin + chunk);
      pool.emplace_back([this, frontier, begin, end, &parts, w] {
        expand_range(ball_, frontier.subspan(begin, end - begin), parts[w]);
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  std::vector<GroupElement> layer;
  for (auto& part : parts) {
    layer.insert(layer.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    part.clear();
    part.shrink_to_fit();
  }
  std::sort(layer.begin(), layer.end());
  layer.erase(std::unique(layer.begin(), layer.end()), layer.end());

  std::size_t needed = (ball_.elements_.size() + layer.size()) * approx_entry_bytes(ball_.dim_);
  if (needed > options_.memory_cap_bytes) {
    throw MemoryCapExceeded(needed, options_.memory_cap_bytes);
  }

  ball_.elements_.reserve(ball_.elements_.size() + layer.size());
  ball_.index_.reserve(ball_.elements_.size() + layer.size());
  for (auto& g : layer) {
    ball_.index_.emplace(g, static_cast<std::uint32_t>(ball_.elements_.size()));
    ball_.elements_.push_back(std::move(g));
  }
  ball_.layer_start_.push_back(ball_.elements_.size());
  ++ball_.radius_;
}

void BallBuilder::grow_to(std::uint32_t radius) {
  while (ball_.radius() < radius) {
    grow();
  }
}

BallCache enumerate_ball(std::size_t dim, std::uint32_t radius, const BallOptions& options) {
  BallBuilder builder(dim, options);
  builder.grow_to(radius);
  return std::move(builder).take();
}

}  // namespace filiform
