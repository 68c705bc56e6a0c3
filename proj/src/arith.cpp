#include "sixmoment/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "sixmoment/error.hpp"

namespace sixmoment {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace sixmoment

namespace sixmoment::arith {

namespace {

constexpr u64 kMaxInput = std::numeric_limits<i64>::max();

// Offsets of residues coprime to 30 within one wheel turn.
constexpr unsigned kWheel[8] = {1, 7, 11, 13, 17, 19, 23, 29};

void divide_out(u64& m, u64 p, std::vector<PrimePower>& out) {
  if (m % p != 0) return;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  out.push_back({p, e});
}

}  // namespace

Factorization::Factorization(u64 n) : n_(n) {
  require(n >= 1, "factorize requires n >= 1");
  require(n <= kMaxInput, "factorize requires n <= 2^63 - 1");
  u64 m = n;
  for (u64 p : {2u, 3u, 5u}) divide_out(m, p, factors_);
  for (u64 base = 0; m > 1; base += 30) {
    for (unsigned off : kWheel) {
      const u64 p = base + off;
      if (p < 7) continue;
      if (p > m / p) {
        if (m > 1) factors_.push_back({m, 1});
        m = 1;
        break;
      }
      divide_out(m, p, factors_);
    }
  }
}

Factorization::Factorization(u64 n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  u64 prod = 1, last = 1;
  for (const auto& pp : factors_) {
    require(pp.prime > last && pp.exponent >= 1, "factor list must have increasing primes");
    last = pp.prime;
    prod = checked_mul(prod, checked_pow(pp.prime, pp.exponent));
  }
  require(prod == n, "factor list does not multiply to n");
}

Factorization factorize(u64 n) { return Factorization(n); }

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "64-bit multiplication overflow");
  return r;
}

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "64-bit addition overflow");
  return r;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    const u64 g = gcd(r, i);
    r = checked_mul(r / g, (n - k + i) / (i / g));
  }
  return r;
}

u64 tau_k(const Factorization& f, unsigned k) {
  require(k >= 1, "tau_k requires k >= 1");
  u64 r = 1;
  for (const auto& pp : f.factors()) r = checked_mul(r, binomial(pp.exponent + k - 1, k - 1));
  return r;
}

u64 tau_k(u64 n, unsigned k) { return tau_k(Factorization(n), k); }

int mobius(const Factorization& f) {
  for (const auto& pp : f.factors())
    if (pp.exponent > 1) return 0;
  return f.omega() % 2 == 0 ? 1 : -1;
}

int mobius(u64 n) { return mobius(Factorization(n)); }

u64 euler_phi(const Factorization& f) {
  u64 r = 1;
  for (const auto& pp : f.factors())
    r = checked_mul(r, checked_pow(pp.prime, pp.exponent - 1) * (pp.prime - 1));
  return r;
}

u64 euler_phi(u64 n) { return euler_phi(Factorization(n)); }

u64 reduce(i64 a, u64 m) noexcept {
  const i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

u64 mod_inverse(i64 a, u64 c) {
  require(c >= 1, "mod_inverse requires c >= 1");
  if (c == 1) return 0;
  using i128 = __int128;
  i128 old_r = static_cast<i128>(reduce(a, c)), r = static_cast<i128>(c);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 qt = old_r / r;
    i128 t = old_r - qt * r;
    old_r = r;
    r = t;
    t = old_s - qt * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    fail(ErrorKind::NotInvertible,
         std::to_string(a) + " is not invertible modulo " + std::to_string(c));
  i128 inv = old_s % static_cast<i128>(c);
  if (inv < 0) inv += c;
  return static_cast<u64>(inv);
}

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const Factorization f(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& pp : f.factors()) {
      if (pow_mod(g, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(ErrorKind::NotPrime, "no primitive root found");
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f.factors()) {
    const std::size_t len = out.size();
    u64 pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < len; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(Factorization(n)); }

std::vector<std::pair<u64, int>> squarefree_divisors(const Factorization& f) {
  std::vector<std::pair<u64, int>> out{{1, 1}};
  for (const auto& pp : f.factors()) {
    const std::size_t len = out.size();
    for (std::size_t i = 0; i < len; ++i) out.push_back({out[i].first * pp.prime, -out[i].second});
  }
  return out;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

Sieve::Sieve(std::uint32_t limit)
    : limit_(limit), spf_(limit + 1, 0), mu_(limit + 1, 0), tau2_(limit + 1, 0), tau3_(limit + 1, 0) {
  std::vector<std::uint32_t> primes;
  if (limit >= 1) {
    mu_[1] = 1;
    tau2_[1] = 1;
    tau3_[1] = 1;
  }
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
      if (p > spf_[i] || ip > limit) break;
      spf_[ip] = p;
    }
  }
  for (std::uint32_t n = 2; n <= limit; ++n) {
    const std::uint32_t p = spf_[n];
    std::uint32_t m = n;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    mu_[n] = e > 1 ? 0 : static_cast<std::int8_t>(-mu_[m]);
    tau2_[n] = tau2_[m] * (e + 1);
    tau3_[n] = tau3_[m] * ((e + 1) * (e + 2) / 2);
  }
}

Factorization Sieve::factorize(std::uint32_t n) const {
  require(n >= 1 && n <= limit_, "Sieve::factorize argument out of range");
  std::vector<PrimePower> out;
  std::uint32_t m = n;
  while (m > 1) {
    const std::uint32_t p = spf_[m];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return Factorization(n, std::move(out));
}

}  // namespace sixmoment::arith
