#include <doctest.h>

#include <cmath>

#include "sixmoment/error.hpp"
#include "sixmoment/moment.hpp"

using namespace sixmoment;
using namespace sixmoment::moment;

TEST_CASE("U weight limits and reality") {
  double imag = 0;
  UWeight u(3);
  CHECK(std::abs(u(1e-8, &imag) - 1.0) < 1e-4);
  CHECK(std::abs(imag) < 1e-10);
  CHECK(u(100.0) < 1e-3);
  CHECK(u(0.1) > u(1.0));
  CHECK(u(1.0) > u(10.0));
}

TEST_CASE("diagonal local factor") {
  const auto c = diagonal_local_factor(6);
  const std::vector<i64> expected = {1, 9, 45, 164, 486, 1242, 2838};
  CHECK(c == expected);
  const auto h = h_factor_check(5, 6);
  CHECK(h[0] == 1);
  CHECK(h[1] == 0);
  CHECK(h[2] == 0);
}

TEST_CASE("Euler and brute diagonal coefficients agree") {
  CHECK(diagonal_coefficients_brute(400, 11) == diagonal_coefficients_euler(400, 11));
}

TEST_CASE("config validation") {
  MomentConfig cfg;
  cfg.k = 2;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.k = 3;
  cfg.q = 12;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("Petersson consistency at small level") {
  const auto r = petersson_consistency_suite(7, 3, 20);
  CHECK(r.pass());
}

TEST_CASE("moment estimate is finite") {
  MomentConfig cfg;
  cfg.q = 11;
  const auto e = moment_bound_estimate(cfg);
  CHECK(std::isfinite(e.normalized));
  CHECK(e.diagonal > 0);
}
