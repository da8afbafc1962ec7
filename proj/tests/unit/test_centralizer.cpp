#include <catch_amalgamated.hpp>

#include <set>

#include "filiform/core/random.hpp"
#include "filiform/core/text.hpp"
#include "filiform/metric/ball.hpp"
#include "filiform/structure/centralizer.hpp"

using namespace filiform;

TEST_CASE("case trichotomy") {
  CHECK(centralizer(GroupElement::a_power(3, 3, BigInt(3))).kind == CentralizerKind::Full);
  CHECK(centralizer(GroupElement::identity(2)).kind == CentralizerKind::Full);
  CHECK(centralizer(GroupElement::generator(3, 1)).kind == CentralizerKind::Lattice);
  auto c = centralizer(GroupElement::t_power(2, BigInt(2)));
  REQUIRE(c.kind == CentralizerKind::RankTwo);
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0] == parse_element("2; 1; 0,0"));
  CHECK(c.generators[1] == parse_element("2; 0; 0,1"));
  CHECK(to_string(CentralizerKind::RankTwo) == "rank-two");
}

TEST_CASE("generators commute with the element") {
  Rng rng(6);
  for (int k = 0; k < 500; ++k) {
    std::size_t d = 2 + k % 3;
    GroupElement g = random_element(d, 5, rng);
    auto c = centralizer(g);
    for (const auto& x : c.generators) {
      REQUIRE(commutes(g, x));
    }
    if (c.kind == CentralizerKind::RankTwo) {
      GroupElement w = power(c.generators[0], BigInt(k % 5 - 2)) *
                       power(c.generators[1], BigInt(k % 7 - 3));
      REQUIRE(commutes(g, w));
    }
  }
}

TEST_CASE("centralizer is complete on the radius five ball") {
  BallCache ball = enumerate_ball(2, 5);
  for (std::size_t i = 0; i < ball.size(); i += 3) {
    const GroupElement& g = ball.element(i);
    auto c = centralizer(g);
    for (const auto& x : ball.elements()) {
      REQUIRE(commutes(g, x) == c.contains(x));
    }
  }
}
