#include <catch_amalgamated.hpp>

#include "filiform/conjugacy/solver.hpp"
#include "filiform/core/errors.hpp"
#include "filiform/core/random.hpp"
#include "filiform/core/text.hpp"
#include "filiform/metric/synthesis.hpp"
#include "filiform/structure/zeta.hpp"

using namespace filiform;

namespace {

GroupElement el(std::string_view s) { return parse_element(s); }

bool verifies(const GroupElement& u, const GroupElement& v, const GroupElement& x) {
  return invert(x) * u * x == v;
}

}  // namespace

TEST_CASE("conjugation basics") {
  for (long r = -5; r <= 5; ++r) {
    CHECK(conjugate(GroupElement::generator(2, 1), GroupElement::t_power(2, BigInt(r))) ==
          GroupElement(BigInt(0), {BigInt(1), BigInt(r)}));
  }
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    GroupElement g = random_element(3, 5, rng);
    GroupElement x = random_element(3, 5, rng);
    CHECK(conjugate(g, GroupElement::identity(3)) == g);
    CHECK(conjugate(conjugate(g, x), invert(x)) == g);
  }
  CHECK_THROWS_AS(conjugate(GroupElement::identity(2), GroupElement::identity(3)),
                  DimensionMismatch);
}

TEST_CASE("lattice case") {
  auto w = solve_in_lattice(el("2; 0; 1,0"), el("2; 0; 1,7"));
  REQUIRE(w);
  CHECK(w->conjugator == el("2; 7; 0,0"));
  auto c = solve_in_lattice(el("2; 0; 0,3"), el("2; 0; 0,3"));
  REQUIRE(c);
  CHECK(c->conjugator.is_identity());
  CHECK_FALSE(solve_in_lattice(el("2; 0; 0,3"), el("2; 0; 0,4")));
  CHECK_THROWS_AS(solve_in_lattice(el("2; 1; 0,3"), el("2; 0; 0,4")), PreconditionViolation);
}

TEST_CASE("lattice case against an exponent scan") {
  for (long k = -30; k <= 30; ++k) {
    GroupElement u = el("3; 0; 1,0,0");
    GroupElement v = GroupElement(BigInt(0), {BigInt(1), BigInt(1), BigInt(k)});
    std::optional<long> expected;
    for (long m = -50; m <= 50; ++m) {
      if (conjugate(u, GroupElement::t_power(3, BigInt(m))) == v) {
        expected = m;
      }
    }
    auto w = solve_in_lattice(u, v);
    REQUIRE(w.has_value() == expected.has_value());
    if (w) {
      CHECK(w->conjugator == GroupElement::t_power(3, BigInt(*expected)));
    }
  }
}

TEST_CASE("central discrepancy") {
  StageRecord rec;
  auto z = solve_central_discrepancy(el("3; 1; 0,0,0"), BigInt(5), &rec);
  REQUIRE(z);
  CHECK(conjugate(el("3; 1; 0,0,0"), *z) == el("3; 1; 0,0,5"));
  CHECK(*z == el("3; 0; 0,-5,0"));
  CHECK(rec.M == 5);
  auto zero = solve_central_discrepancy(el("3; 2; 1,0,4"), BigInt(0));
  REQUIRE(zero);
  CHECK(zero->is_identity());
  // t^2 a1 in the quotient has image 2Z
  CHECK(zeta_image(el("2; 2; 1,0")).image_generator == 2);
  CHECK_FALSE(solve_central_discrepancy(el("3; 2; 1,0,0"), BigInt(3)));
  auto even = solve_central_discrepancy(el("3; 2; 1,0,0"), BigInt(-4));
  REQUIRE(even);
  CHECK(conjugate(el("3; 2; 1,0,0"), *even) == el("3; 2; 1,0,-4"));
}

TEST_CASE("negative discrepancies agree with a ball scan") {
  // no conjugator of t^2 a1 in a small ball shifts the centre by an odd amount
  GroupElement g = el("3; 2; 1,0,0");
  Rng rng(1);
  for (int k = 0; k < 2000; ++k) {
    GroupElement x = eval_word(random_word(3, 1 + k % 6, rng));
    GroupElement c = conjugate(g, x);
    if (project(c) == project(g)) {
      REQUIRE(divides(BigInt(2), c.a(3)));
    }
  }
}

TEST_CASE("the lower bound family") {
  for (long n = 1; n <= 8; ++n) {
    GroupElement u = GroupElement::generator(2, 1);
    GroupElement v = GroupElement(BigInt(0), {BigInt(1), BigInt(n * n)});
    auto w = solve_conjugacy(u, v);
    REQUIRE(w);
    CHECK(w->conjugator == GroupElement::t_power(2, BigInt(n * n)));
    CHECK(w->word_length == static_cast<std::size_t>(n * n));
    CHECK(w->input_size <= static_cast<std::size_t>(4 * n + 1));
  }
}

TEST_CASE("negative answers") {
  CHECK_FALSE(solve_conjugacy(GroupElement::generator(2, 2), GroupElement::a_power(2, 2, BigInt(2))));
  CHECK_FALSE(solve_conjugacy(el("2; 1; 0,0"), el("2; 2; 0,0")));
  CHECK_FALSE(solve_conjugacy(el("1; 1; 0"), el("1; 1; 1")));
  auto same = solve_conjugacy(el("1; 4; 3"), el("1; 4; 3"));
  REQUIRE(same);
  CHECK(same->conjugator.is_identity());
  CHECK_THROWS_AS(solve_conjugacy(el("1; 4; 3"), el("2; 4; 3,0")), DimensionMismatch);
}

TEST_CASE("constructed conjugates are always solved") {
  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    std::size_t d = 1 + k % 4;
    GroupElement u = random_element(d, 6, rng);
    GroupElement c = random_element(d, 6, rng);
    GroupElement v = conjugate(u, c);
    auto w = solve_conjugacy(u, v);
    REQUIRE(w);
    REQUIRE(verifies(u, v, w->conjugator));
    REQUIRE(eval_word(w->word) == w->conjugator);
    REQUIRE(w->word_length == w->word.length());
    REQUIRE(w->input_size ==
            std::max(short_word(u).length(), short_word(v).length()));
  }
}

TEST_CASE("symmetry and transitivity") {
  Rng rng(99);
  for (int k = 0; k < 300; ++k) {
    std::size_t d = 2 + k % 3;
    GroupElement u = random_element(d, 5, rng);
    GroupElement v = conjugate(u, random_element(d, 5, rng));
    GroupElement w = conjugate(v, random_element(d, 5, rng));
    auto back = solve_conjugacy(v, u);
    REQUIRE(back);
    REQUIRE(verifies(v, u, back->conjugator));
    auto uw = solve_conjugacy(u, w);
    REQUIRE(uw);
    REQUIRE(verifies(u, w, uw->conjugator));
  }
}

TEST_CASE("dimension two equation") {
  // x = t^s a1^omega a2^*, u = t^r a1^alpha a2^eta: conjugation shifts the
  // central coordinate by s*alpha - r*omega.
  Rng rng(5);
  std::uniform_int_distribution<int> pick(-6, 6);
  for (int k = 0; k < 500; ++k) {
    long r = pick(rng);
    long alpha = pick(rng);
    long eta = pick(rng);
    long s = pick(rng);
    long omega = pick(rng);
    GroupElement u(BigInt(r), {BigInt(alpha), BigInt(eta)});
    GroupElement x(BigInt(s), {BigInt(omega), BigInt(pick(rng))});
    GroupElement v = conjugate(u, x);
    long xi = to_int64(v.a(2));
    if (r == 0 && alpha == 0) {
      continue;
    }
    auto w = solve_conjugacy(u, v);
    REQUIRE(w);
    long ws = to_int64(w->conjugator.t_exp());
    long wo = to_int64(w->conjugator.a(1));
    if (r == 0) {
      REQUIRE(ws * alpha == xi - eta);
    } else {
      REQUIRE(v.a(1) == alpha);
      REQUIRE(ws * alpha - r * wo == xi - eta);
      // the brute-force scan also finds a solution with the same residue
      bool found = false;
      for (long s2 = -20; s2 <= 20 && !found; ++s2) {
        for (long o2 = -20; o2 <= 20 && !found; ++o2) {
          found = s2 * alpha - r * o2 == xi - eta;
        }
      }
      REQUIRE(found);
    }
  }
}

TEST_CASE("stage log records the recursion") {
  std::vector<StageRecord> log;
  auto x = find_conjugator(el("3; 1; 0,0,0"), el("3; 1; 0,0,5"), &log);
  REQUIRE(x);
  REQUIRE_FALSE(log.empty());
  CHECK(log.back().kind == StageKind::CentralCorrection);
  CHECK(log.back().level == 3);
  CHECK(to_string(StageKind::Lattice) == "lattice");
}
