#include <doctest.h>

#include <cmath>

#include "sixmoment/estermann.hpp"

using namespace sixmoment;
using namespace sixmoment::estermann;

TEST_CASE("d3 spot values") {
  CHECK(std::abs(d_coeffs_direct(2).d3 - 0.75) < 1e-12);
  CHECK(std::abs(d_coeffs_direct(4).d3 - 0.5) < 1e-12);
  CHECK(std::abs(d3_closed_form(6) - 5.0 / 12.0) < 1e-12);
  CHECK(std::abs(d_coeffs_direct(1).d3 - 1.0) < 1e-12);
}

TEST_CASE("direct formulas agree with the naive and contour evaluations") {
  for (u64 eta : {3, 8, 12}) {
    const auto d = d_coeffs_direct(eta);
    const auto n = d_coeffs_naive(eta);
    CHECK(std::abs(d.d2 - n.d2) < 1e-10);
    CHECK(std::abs(d.d1 - n.d1) < 1e-10);
    const auto c1 = laurent_via_cauchy(static_cast<i64>(eta - 1), eta);
    CHECK(std::abs(c1.d1 - d.d1) < 1e-6);
  }
}

TEST_CASE("closed form and direct d3 agree on a range") {
  const auto rep = d3_closed_form_suite(200, 1e-10);
  CHECK(rep.pass());
}

TEST_CASE("analytic continuation matches truncated sums on Re s > 1") {
  const auto a = e3_analytic(cplx(3.0, 0.5), 1, 5);
  const auto t = e3_truncated(cplx(3.0, 0.5), 1, 5, 200000);
  CHECK(std::abs(a - t.value) < 1e-6);
}
