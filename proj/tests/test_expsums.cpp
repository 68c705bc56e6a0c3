#include <doctest.h>

#include <cmath>

#include "sixmoment/arith.hpp"
#include "sixmoment/expsums.hpp"

using namespace sixmoment;
using namespace sixmoment::expsums;

TEST_CASE("character table") {
  CharacterTable t(7);
  CHECK(t.order() == 6);
  CHECK(!t.exponent(1, 14).has_value());
  for (u64 j = 0; j < 6; ++j) CHECK(std::abs(t.value(j, 2) * t.value(j, 4) - t.value(j, 1)) < 1e-13);
}

TEST_CASE("orthogonality matches the closed form") {
  for (u64 q : {5, 7})
    for (int k : {3, 4}) {
      CharacterTable t(q);
      for (i64 m = 0; m < static_cast<i64>(q); ++m)
        for (i64 n = 0; n < static_cast<i64>(q); ++n)
          CHECK(std::abs(orthogonality_avg(m, n, t, k) - orthogonality_expected(m, n, q, k)) < 1e-12);
    }
}

TEST_CASE("Kloosterman sums") {
  CHECK(std::abs(kloosterman(1, 1, 1).value - 1.0) < 1e-14);
  CHECK(std::abs(kloosterman(0, 0, 12).value - static_cast<double>(arith::euler_phi(12))) < 1e-12);
  const auto s = kloosterman(3, 5, 97);
  CHECK(std::abs(s.value.imag()) < 1e-11);
  CHECK(weil_check(3, 5, 97).ok);
  const auto split = kloosterman_crt_split(2, 3, 7, 11);
  CHECK(std::abs(split.whole - split.product) < 1e-9);
}

TEST_CASE("conductor lowering worked example") {
  const auto sides = conductor_lowering_sides(1, 5, 2, 1, 1, 0);
  CHECK(std::abs(sides.lhs - sides.rhs) < 1e-9);
  CHECK(std::abs(sides.lhs - expi2pi(3.0 / 5.0)) < 1e-9);
}
