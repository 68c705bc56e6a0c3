#include <doctest.h>

#include <cmath>

#include "sixmoment/lemmas.hpp"

using namespace sixmoment;
using namespace sixmoment::lemmas;

TEST_CASE("sumstar counts are exact") {
  for (u64 c : {1, 6, 12, 30})
    for (u64 ell : {1, 2, 5, 9})
      for (i64 a = 0; a < static_cast<i64>(ell); ++a)
        if (arith::gcd(static_cast<u64>(a), ell) == 1 || ell == 1) CHECK(sumstar_count(c, ell, a).equal());
}

TEST_CASE("K operator") {
  CHECK(std::abs(kappa_apply(cplx(1, 0), 3)) < 1e-15);
  CHECK(std::abs(kappa_apply(cplx(0, 1), 3) - cplx(-2, 0)) < 1e-15);
}

TEST_CASE("smooth cutoff shape") {
  for (auto shape : {SmoothCutoff::Shape::SmoothStep, SmoothCutoff::Shape::CosineRamp}) {
    SmoothCutoff w(10.0, shape);
    CHECK(w.w(0.5) == 1.0);
    CHECK(w.w(2.5) == 0.0);
    double prev = 1.0;
    for (double x = 1.0; x <= 2.0; x += 0.01) {
      CHECK(w.w(x) <= prev + 1e-15);
      prev = w.w(x);
    }
  }
}

TEST_CASE("smoothed zeta identity converges") {
  const auto s = smoothed_zeta_identity(cplx(0.5, 2.0), 1, 1e4);
  CHECK(s.residual < 1e-5);
}

TEST_CASE("C functions: divisor sum equals Euler product") {
  for (u64 n : {12, 30, 97, 360})
    for (int j1 = 0; j1 <= 2; ++j1)
      for (int j2 = 0; j2 <= 2; ++j2) {
        const cplx z(0.3, 1.1);
        for (int v : {1, 2}) CHECK(std::abs(cfunc(v, n, z, j1, j2) - cfunc_product(v, n, z, j1, j2)) < 1e-9);
      }
}

TEST_CASE("local derivative closed forms vs finite differences") {
  const auto d = cfunc_derivative_crosscheck(3, 2, cplx(0.5, 0.7), 1, 2);
  CHECK(std::abs(d.closed - d.fd) < 1e-6);
}

TEST_CASE("y exponent spot values") {
  CHECK(y_exponent(0, 0, 0, 1).y == doctest::Approx(-1.75));
  CHECK(y_exhaustive_check(0.25, 1, 500).pass());
}

TEST_CASE("Bessel split residual bound") {
  const auto b = bessel_split_check(1, 2, 0.02, 0.005, 5, 200, 100000, 1000000);
  CHECK(std::abs(b.lhs - b.rhs) <= b.residual);
}
