#include <doctest.h>

#include <cmath>

#include "sixmoment/error.hpp"
#include "sixmoment/special.hpp"

using namespace sixmoment;
using namespace sixmoment::special;

TEST_CASE("zeta values") {
  CHECK(std::abs(riemann_zeta(2.0) - kPi * kPi / 6) < 1e-13);
  CHECK(std::abs(riemann_zeta(0.0) + 0.5) < 1e-13);
  CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - (kPi * kPi / 2)) < 1e-12);
  CHECK_THROWS_AS(riemann_zeta(1.0), Error);
}

TEST_CASE("Stieltjes constants") {
  CHECK(std::abs(stieltjes_gamma(0, 1.0) - kEulerGamma) < 1e-12);
  CHECK(std::abs(stieltjes_gamma(1, 1.0) + 0.0728158454836767) < 1e-10);
  CHECK(std::abs(stieltjes_gamma(0, 0.5) - (kEulerGamma + 2 * std::log(2.0))) < 1e-12);
}

TEST_CASE("Gamma family") {
  CHECK(std::abs(gamma(cplx(5.0)) - 24.0) < 1e-11);
  CHECK(std::abs(digamma(1.0) + kEulerGamma) < 1e-13);
  CHECK_THROWS_AS(gamma(cplx(-2.0)), Error);
}

TEST_CASE("Bessel J: three evaluations agree") {
  for (int nu : {0, 2, 4})
    for (double x : {0.3, 2.0, 7.5}) {
      const double a = bessel_j(nu, x);
      CHECK(std::abs(a - bessel_j_series(nu, x)) < 1e-12);
      CHECK(std::abs(a - bessel_j_integral(nu, x)) < 1e-12);
      CHECK(std::abs(a) <= bessel_j_bound(nu, x) + 1e-15);
    }
  CHECK(std::abs(bessel_zeros(0, 1)[0] - 2.404825557695773) < 1e-10);
}

TEST_CASE("Hankel closed form vs quadrature") {
  const auto acc = hankel_moment_quadrature(cplx(-0.5), 2, 1.0, 1);
  CHECK(std::abs(acc.value - hankel_moment(cplx(-0.5), 2, 1.0, 1)) < 1e-5);
}
