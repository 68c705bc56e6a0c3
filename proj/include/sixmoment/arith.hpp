#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sixmoment::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, empty iff n == 1.
class Factorization {
 public:
  explicit Factorization(u64 n);
  /// Adopts a precomputed factor list; throws if it is not the canonical
  /// factorization of n.
  Factorization(u64 n, std::vector<PrimePower> factors);

  u64 value() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::size_t omega() const noexcept { return factors_.size(); }

 private:
  u64 n_;
  std::vector<PrimePower> factors_;
};

Factorization factorize(u64 n);

// Checked 64-bit arithmetic; overflow throws ErrorKind::Overflow.
u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);

u64 gcd(u64 a, u64 b) noexcept;
u64 binomial(u64 n, u64 k);

/// Number of ordered k-tuples of positive integers with product n.
u64 tau_k(u64 n, unsigned k);
u64 tau_k(const Factorization& f, unsigned k);
int mobius(u64 n);
int mobius(const Factorization& f);
u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

/// The unique x in [0, c) with a*x == 1 (mod c). Throws NotInvertible.
u64 mod_inverse(i64 a, u64 c);
u64 mul_mod(u64 a, u64 b, u64 m) noexcept;
u64 pow_mod(u64 base, u64 exp, u64 m) noexcept;
/// Least nonnegative residue of a modulo m, for signed a.
u64 reduce(i64 a, u64 m) noexcept;

bool is_prime(u64 n);
/// Smallest primitive root modulo a prime p. Throws NotPrime.
u64 primitive_root(u64 p);

/// All positive divisors in increasing order.
std::vector<u64> divisors(const Factorization& f);
std::vector<u64> divisors(u64 n);
/// Squarefree divisors of n, with their Mobius signs.
std::vector<std::pair<u64, int>> squarefree_divisors(const Factorization& f);

std::vector<u64> primes_up_to(u64 limit);

/// Multiplicative-function tables on [0, limit]; entry 0 is unused.
struct Sieve {
  explicit Sieve(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::uint32_t smallest_prime_factor(std::uint32_t n) const { return spf_[n]; }
  Factorization factorize(std::uint32_t n) const;
  int mobius(std::uint32_t n) const { return mu_[n]; }
  std::uint32_t tau2(std::uint32_t n) const { return tau2_[n]; }
  std::uint32_t tau3(std::uint32_t n) const { return tau3_[n]; }

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> tau2_;
  std::vector<std::uint32_t> tau3_;
};

}  // namespace sixmoment::arith
