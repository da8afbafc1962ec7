#include <catch_amalgamated.hpp>

#include "filiform/core/errors.hpp"
#include "filiform/core/random.hpp"
#include "filiform/core/text.hpp"
#include "filiform/metric/ball.hpp"
#include "filiform/structure/roots.hpp"
#include "support/oracles.hpp"

using namespace filiform;

namespace {

GroupElement el(std::string_view s) { return parse_element(s); }

}  // namespace

TEST_CASE("square root of t^2 a1^2 a2") {
  auto h = root_exact(el("2; 2; 2,1"), BigInt(2));
  REQUIRE(h);
  CHECK(*h == el("2; 1; 1,0"));
  CHECK(oracle::power(*h, 2) == el("2; 2; 2,1"));
  CHECK_FALSE(root_exact(el("2; 2; 2,0"), BigInt(2)));
  CHECK_FALSE(root_exact(el("2; 3; 0,0"), BigInt(2)));
  CHECK(root_exact(el("3; 5; 1,2,3"), BigInt(1)) == el("3; 5; 1,2,3"));
  CHECK_THROWS_AS(root_exact(el("2; 2; 2,1"), BigInt(0)), PreconditionViolation);
}

TEST_CASE("odd roots of t^n a1^n") {
  for (long n = 1; n <= 21; n += 2) {
    GroupElement g = GroupElement(BigInt(n), {BigInt(n), BigInt(0)});
    auto h = root_exact(g, BigInt(n));
    REQUIRE(h);
    CHECK(oracle::power(*h, n) == g);
    // t a1 a2^{(1-n)/2}, equivalently a1 t a2^{-(n+1)/2}
    CHECK(*h == GroupElement(BigInt(1), {BigInt(1), BigInt((1 - n) / 2)}));
    GroupElement a1t = GroupElement::generator(2, 1) * GroupElement::generator(2, 0);
    CHECK(*h == a1t * GroupElement::a_power(2, 2, BigInt(-(n + 1) / 2)));
  }
}

TEST_CASE("roots of powers recover the base") {
  Rng rng(31);
  for (int k = 0; k < 1000; ++k) {
    std::size_t d = 1 + k % 4;
    GroupElement g = random_element(d, 6, rng);
    long p = 1 + k % 7;
    auto h = root_exact(power(g, BigInt(p)), BigInt(p));
    REQUIRE(h);
    REQUIRE(*h == g);
  }
}

TEST_CASE("roots are unique on the radius six ball") {
  BallCache b = enumerate_ball(2, 6);
  for (long p = 2; p <= 3; ++p) {
    std::map<GroupElement, int> hits;
    for (const auto& h : b.elements()) {
      ++hits[power(h, BigInt(p))];
    }
    for (const auto& [g, count] : hits) {
      REQUIRE(count == 1);
      auto h = root_exact(g, BigInt(p));
      REQUIRE(h);
      REQUIRE(power(*h, BigInt(p)) == g);
    }
  }
}

TEST_CASE("maximal root modulo the centre, base dimension") {
  RootDecomposition r = max_root_mod_center(el("1; 4; 2"));
  CHECK(r.exponent == 4);
  CHECK(r.central_offset == 2);
  CHECK(r.base == el("1; 1; 0"));
  RootDecomposition t = max_root_mod_center(el("3; 1; 0,0,0"));
  CHECK(t.base == el("3; 1; 0,0,0"));
  CHECK(t.exponent == 1);
  CHECK(t.central_offset == 0);
  CHECK_THROWS_AS(max_root_mod_center(el("2; 0; 1,1")), PreconditionViolation);
}

TEST_CASE("maximal root decomposition round trip") {
  Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    std::size_t d = 1 + k % 4;
    GroupElement h = random_element(d, 3, rng);
    if (h.t_exp() == 0) {
      h.mul_t(false);
    }
    GroupElement g = power(h, BigInt(6)) * GroupElement::a_power(d, d, BigInt(5));
    RootDecomposition r = max_root_mod_center(g);
    REQUIRE(r.exponent >= 6);
    REQUIRE(r.central_offset >= 0);
    REQUIRE(r.central_offset < r.exponent);
    REQUIRE(power(r.base, r.exponent) * GroupElement::a_power(d, d, r.central_offset) == g);
  }
}

TEST_CASE("maximal exponent agrees with a divisor scan") {
  Rng rng(40);
  for (int k = 0; k < 300; ++k) {
    std::size_t d = 1 + k % 3;
    GroupElement g = random_element(d, 12, rng);
    if (g.t_exp() == 0) {
      continue;
    }
    RootDecomposition r = max_root_mod_center(g);
    long t = std::abs(to_int64(g.t_exp()));
    long best = 0;
    for (long p = t; p >= 1 && best == 0; --p) {
      if (t % p != 0) {
        continue;
      }
      for (long off = 0; off < p; ++off) {
        GroupElement shifted = g * GroupElement::a_power(d, d, BigInt(-off));
        if (root_exact(shifted, BigInt(p))) {
          best = p;
          break;
        }
      }
    }
    REQUIRE(r.exponent == best);
  }
}
