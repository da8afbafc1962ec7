#include <catch_amalgamated.hpp>

#include "filiform/core/random.hpp"
#include "filiform/core/text.hpp"
#include "filiform/metric/ball.hpp"
#include "filiform/metric/constants.hpp"
#include "filiform/metric/distance.hpp"
#include "filiform/metric/synthesis.hpp"

using namespace filiform;

TEST_CASE("commutator gadget for squares") {
  for (long k = 1; k <= 12; ++k) {
    Word w = central_power_word(BigInt(k * k), 2);
    CHECK(w.length() == static_cast<std::size_t>(4 * k));
    CHECK(eval_word(w) == GroupElement::a_power(2, 2, BigInt(k * k)));
  }
  CHECK(format_word(central_power_word(BigInt(4), 2)) == "A1 A1 T T a1 a1 t t");
  CHECK(central_power_word(BigInt(0), 3).empty());
}

TEST_CASE("central words evaluate exactly") {
  for (long p = -50; p <= 500; ++p) {
    REQUIRE(eval_word(central_power_word(BigInt(p), 3)) == GroupElement::a_power(3, 3, BigInt(p)));
  }
  for (long p : {1L, 17L, 1000L, 123457L}) {
    REQUIRE(eval_word(central_power_word(BigInt(p), 4)) == GroupElement::a_power(4, 4, BigInt(p)));
  }
}

TEST_CASE("central word length is within D_d times the d-th root") {
  for (std::size_t d = 2; d <= 4; ++d) {
    Constants c = compute_constants(d);
    for (long p = 1; p <= 3000; p += (d == 4 ? 37 : 1)) {
      BigInt root = iroot_ceil(BigInt(p), static_cast<unsigned>(d));
      REQUIRE(central_power_word(BigInt(p), d).length() <= c.D_d() * root);
    }
  }
}

TEST_CASE("short word round trip") {
  Rng rng(17);
  for (int k = 0; k < 10000; ++k) {
    std::size_t d = 1 + k % 5;
    GroupElement g = random_element(d, 8, rng);
    REQUIRE(eval_word(short_word(g)) == g);
  }
  CHECK(short_word(GroupElement::t_power(3, BigInt(7))).length() == 7);
  CHECK(short_word(GroupElement::t_power(3, BigInt(-7))).length() == 7);
}

TEST_CASE("short word length is within C_d times the size bound") {
  Rng rng(2);
  for (std::size_t d = 1; d <= 4; ++d) {
    Constants c = compute_constants(d);
    for (int k = 0; k < 500; ++k) {
      GroupElement g = random_element(d, 30, rng);
      REQUIRE(short_word(g).length() <= c.C_d() * size_lower_bound(g));
    }
  }
}

TEST_CASE("lower bound family has short inputs") {
  for (long n = 1; n <= 20; ++n) {
    GroupElement g = parse_element("2; 0; 1," + std::to_string(n * n));
    CHECK(short_word(g).length() <= static_cast<std::size_t>(4 * n + 1));
  }
}
