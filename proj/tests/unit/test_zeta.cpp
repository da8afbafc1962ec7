#include <catch_amalgamated.hpp>

#include "filiform/core/errors.hpp"
#include "filiform/core/random.hpp"
#include "filiform/core/text.hpp"
#include "filiform/structure/centralizer.hpp"
#include "filiform/structure/roots.hpp"
#include "filiform/structure/zeta.hpp"

using namespace filiform;

namespace {

GroupElement el(std::string_view s) { return parse_element(s); }

GroupElement random_centralizer_element(const CentralizerDescription& c, Rng& rng) {
  std::uniform_int_distribution<int> pick(-6, 6);
  std::size_t d = c.dim;
  if (c.kind == CentralizerKind::RankTwo) {
    return power(c.generators[0], BigInt(pick(rng))) * power(c.generators[1], BigInt(pick(rng)));
  }
  std::vector<BigInt> p(d);
  for (auto& x : p) {
    x = pick(rng);
  }
  return GroupElement(BigInt(0), std::move(p));
}

}  // namespace

TEST_CASE("zeta on the basic relation") {
  CHECK(zeta(el("2; 1; 0,0"), el("2; 0; 0,-1")) == 1);
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    GroupElement g = random_element(1 + k % 4, 5, rng);
    CHECK(zeta(g, g) == 0);
  }
  CHECK_THROWS_AS(zeta(el("2; 1; 0,0"), el("2; 0; 1,0")), NotInCentralizer);
}

TEST_CASE("zeta is additive on the centralizer") {
  Rng rng(77);
  for (int k = 0; k < 1000; ++k) {
    std::size_t d = 1 + k % 3;
    GroupElement g = random_element(d, 4, rng);
    if (g.in_lattice()) {
      g.mul_t(k % 2 == 0);
    }
    auto c = centralizer(g);
    GroupElement x = random_centralizer_element(c, rng);
    GroupElement y = random_centralizer_element(c, rng);
    REQUIRE(zeta(g, x * y) == zeta(g, x) + zeta(g, y));
  }
}

TEST_CASE("zeta does not depend on the lift") {
  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    std::size_t d = 1 + k % 3;
    GroupElement g = random_element(d, 4, rng);
    if (g.in_lattice()) {
      continue;
    }
    GroupElement x = power(max_root_mod_center(g).base, BigInt(k % 5 - 2));
    GroupElement gl = lift(g) * GroupElement::a_power(d + 1, d + 1, BigInt(k - 100));
    GroupElement xl = lift(x) * GroupElement::a_power(d + 1, d + 1, BigInt(3 * k));
    GroupElement c = invert(xl) * gl * xl * invert(gl);
    REQUIRE(c.is_central());
    REQUIRE(c.a(d + 1) == zeta(g, x));
  }
}

TEST_CASE("image data of t") {
  ZetaData z = zeta_image(el("2; 1; 0,0"));
  CHECK(z.p == 1);
  CHECK(z.r == 0);
  CHECK(z.q == 1);
  CHECK(z.e == 1);
  CHECK(z.image_generator == 1);
}

TEST_CASE("image data of t^2 a1 matches a divisor scan") {
  GroupElement g = el("2; 2; 1,0");
  ZetaData z = zeta_image(g);
  // t^2 a1 has no square root even modulo a2, so p = 1.
  for (int off = 0; off < 2; ++off) {
    CHECK_FALSE(root_exact(g * GroupElement::a_power(2, 2, BigInt(-off)), BigInt(2)));
  }
  CHECK(z.p == 1);
  CHECK(z.r == 0);
  CHECK(z.q == 2);
  CHECK(z.e == 1);
  CHECK(z.image_generator == 2);
}

TEST_CASE("image generators and divisibility") {
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    std::size_t d = 1 + k % 3;
    GroupElement h = random_element(d, 3, rng);
    if (h.in_lattice()) {
      h.mul_t(false);
    }
    GroupElement g = power(h, BigInt(1 + k % 4)) * GroupElement::a_power(d, d, BigInt(k % 3));
    ZetaData z = zeta_image(g);
    REQUIRE(zeta(g, GroupElement::a_power(d, d, BigInt(-1))) == z.p * z.q);
    REQUIRE(zeta(g, z.base) == z.r * z.q);
    REQUIRE(z.e == gcd(z.p, z.r));
    auto c = centralizer(g);
    for (int j = 0; j < 10; ++j) {
      REQUIRE(divides(z.image_generator, zeta(g, random_centralizer_element(c, rng))));
    }
  }
  CHECK_THROWS_AS(zeta_image(el("2; 0; 1,1")), PreconditionViolation);
}
