#include <catch_amalgamated.hpp>

#include "filiform/core/errors.hpp"
#include "filiform/core/phi.hpp"
#include "support/oracles.hpp"

using namespace filiform;

namespace {

void check_equal(const PhiMatrix& phi, const oracle::Matrix& m) {
  for (std::size_t r = 0; r < phi.dim(); ++r) {
    for (std::size_t c = 0; c < phi.dim(); ++c) {
      REQUIRE(phi.entry(r, c) == m[r][c]);
    }
  }
}

}  // namespace

TEST_CASE("phi and its inverse in dimension three") {
  PhiMatrix one = phi_pow(3, 1);
  oracle::Matrix expected = {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}};
  check_equal(one, expected);
  oracle::Matrix expected_inv = {{1, 0, 0}, {-1, 1, 0}, {1, -1, 1}};
  check_equal(phi_pow(3, -1), expected_inv);
  check_equal(phi_pow(3, 0), oracle::phi_power_iterated(3, 0));
  CHECK(phi_pow(3, 4).entry(2, 0) == 6);
}

TEST_CASE("closed form equals iterated multiplication") {
  for (std::size_t d = 1; d <= 6; ++d) {
    for (long m = -50; m <= 50; m += 7) {
      check_equal(phi_pow(d, BigInt(m)), oracle::phi_power_iterated(d, m));
    }
  }
}

TEST_CASE("composition law") {
  for (std::size_t d = 1; d <= 6; d += 2) {
    for (long m = -50; m <= 50; m += 10) {
      for (long n = -50; n <= 50; n += 13) {
        PhiMatrix prod = phi_pow(d, BigInt(m)) * phi_pow(d, BigInt(n));
        CHECK(prod == phi_pow(d, BigInt(m + n)));
      }
    }
  }
}

TEST_CASE("epsilon reads the bottom row") {
  CHECK(epsilon(3, 1, BigInt(4)) == 6);
  for (long n = 0; n <= 50; ++n) {
    CHECK(epsilon(2, 1, BigInt(n)) == n);
  }
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::size_t i = 1; i < d; ++i) {
      CHECK(epsilon(d, i, BigInt(0)) == 0);
    }
  }
  CHECK_THROWS_AS(epsilon(3, 3, BigInt(1)), PreconditionViolation);
  CHECK_THROWS_AS(epsilon(3, 0, BigInt(1)), PreconditionViolation);
}

TEST_CASE("epsilon obeys the polynomial bound") {
  for (std::size_t d = 2; d <= 6; ++d) {
    BigInt eps = epsilon_bound(d);
    for (long m = -50; m <= 50; ++m) {
      for (std::size_t i = 1; i < d; ++i) {
        BigInt bound = eps * ipow(BigInt(m >= 0 ? m : -m), static_cast<unsigned>(d - i));
        CHECK(abs(epsilon(d, i, BigInt(m))) <= bound);
      }
    }
  }
}

TEST_CASE("applying a power matches the matrix") {
  std::vector<BigInt> v = {3, -1, 4, 1, -5};
  for (long m : {-9L, -1L, 0L, 1L, 2L, 13L}) {
    std::vector<BigInt> w = v;
    apply_phi_power(w, BigInt(m));
    CHECK(w == oracle::mat_apply(oracle::phi_power_iterated(5, m), v));
    CHECK(w == phi_pow(5, BigInt(m)).apply(v));
  }
}
