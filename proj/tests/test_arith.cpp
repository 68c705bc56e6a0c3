#include <doctest.h>

#include "sixmoment/arith.hpp"
#include "sixmoment/error.hpp"

using namespace sixmoment;
using namespace sixmoment::arith;

TEST_CASE("factorization is canonical") {
  const auto f = factorize(360);
  REQUIRE(f.omega() == 3);
  CHECK(f.factors()[0] == PrimePower{2, 3});
  CHECK(f.factors()[2] == PrimePower{5, 1});
  CHECK(factorize(1).omega() == 0);
  CHECK_THROWS_AS(Factorization(12, {{2, 1}, {3, 1}}), Error);
}

TEST_CASE("divisor functions") {
  CHECK(tau_k(12, 2) == 6);
  CHECK(tau_k(12, 3) == 18);
  CHECK(tau_k(1, 3) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("sieve agrees with direct evaluation") {
  Sieve sv(2000);
  for (std::uint32_t n = 1; n <= 2000; ++n) {
    CHECK(sv.mobius(n) == mobius(n));
    CHECK(sv.tau3(n) == tau_k(n, 3));
  }
}

TEST_CASE("modular inverses and primitive roots") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(-3, 7) == 2);
  CHECK_THROWS_AS(mod_inverse(2, 4), Error);
  CHECK(primitive_root(7) == 3);
  CHECK_THROWS_AS(primitive_root(8), Error);
}

TEST_CASE("checked arithmetic overflows loudly") {
  CHECK(checked_pow(2, 63) == (u64{1} << 63));
  try {
    checked_pow(2, 64);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}
