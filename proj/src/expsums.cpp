#include "sixmoment/expsums.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "sixmoment/error.hpp"
#include "sixmoment/special.hpp"

namespace sixmoment::expsums {

using i128 = __int128;

namespace {

u64 mod128(i128 a, u64 m) {
  i128 r = a % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

std::string key_of(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ',';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

// ---- characters ----

CharacterTable::CharacterTable(u64 q) : q_(q) {
  if (!arith::is_prime(q)) fail(ErrorKind::NotPrime, "character_table: modulus must be prime");
  require(q >= 3, "character_table: modulus must be at least 3");
  g_ = arith::primitive_root(q);
  dlog_.assign(q, 0);
  u64 x = 1;
  for (u64 e = 0; e < q - 1; ++e) {
    dlog_[x] = e;
    x = arith::mul_mod(x, g_, q);
  }
}

u64 CharacterTable::dlog(i64 a) const {
  const u64 r = arith::reduce(a, q_);
  require(r != 0, "CharacterTable::dlog: argument must be a unit");
  return dlog_[r];
}

std::optional<u64> CharacterTable::exponent(u64 j, i64 a) const {
  const u64 r = arith::reduce(a, q_);
  if (r == 0) return std::nullopt;
  return arith::mul_mod(j % (q_ - 1), dlog_[r], q_ - 1);
}

cplx CharacterTable::value(u64 j, i64 a) const {
  const auto e = exponent(j, a);
  if (!e) return 0.0;
  return root_of_unity(static_cast<long long>(*e), static_cast<long long>(q_ - 1));
}

bool CharacterTable::is_odd(u64 j) const { return *exponent(j, -1) != 0; }

cplx orthogonality_avg(i64 m, i64 n, const CharacterTable& t, int k) {
  const u64 q = t.modulus();
  const bool want_odd = (k % 2) != 0;
  CompensatedSum<cplx> s;
  for (u64 j = 0; j < t.order(); ++j) {
    if (t.is_odd(j) != want_odd) continue;
    const auto em = t.exponent(j, m), en = t.exponent(j, n);
    if (!em || !en) continue;
    const long long d = static_cast<long long>(*em) - static_cast<long long>(*en);
    s += root_of_unity(d, static_cast<long long>(q - 1));
  }
  return 2.0 / static_cast<double>(q - 1) * s.value();
}

double orthogonality_expected(i64 m, i64 n, u64 q, int k) {
  const u64 rm = arith::reduce(m, q), rn = arith::reduce(n, q);
  if (rm == 0 || rn == 0) return 0.0;
  if (rm == rn) return 1.0;
  if ((rm + rn) % q == 0) return (k % 2 == 0) ? 1.0 : -1.0;
  return 0.0;
}

// ---- Kloosterman sums ----

ModulusContext::ModulusContext(u64 c) : c_(c) {
  require(c >= 1, "ModulusContext: modulus must be positive");
  for (u64 a = 0; a < c; ++a) {
    if (arith::gcd(a, c) != 1) continue;
    units_.push_back(a);
    inv_.push_back(arith::mod_inverse(static_cast<i64>(a), c));
  }
  roots_.resize(c);
  for (u64 r = 0; r < c; ++r) roots_[r] = root_of_unity(static_cast<long long>(r), static_cast<long long>(c));
}

KloostermanValue kloosterman(i64 m, i64 n, const ModulusContext& ctx) {
  const u64 c = ctx.modulus();
  const u64 mm = arith::reduce(m, c), nn = arith::reduce(n, c);
  CompensatedSum<cplx> s;
  const auto& us = ctx.units();
  const auto& inv = ctx.inverses();
  for (std::size_t i = 0; i < us.size(); ++i) {
    const u64 r = (arith::mul_mod(us[i], mm, c) + arith::mul_mod(inv[i], nn, c)) % c;
    s += ctx.root(r);
  }
  return {s.value(), c, m, n, std::nullopt};
}

KloostermanValue kloosterman(i64 m, i64 n, u64 c) { return kloosterman(m, n, ModulusContext(c)); }

KloostermanValue kloosterman(i64 m, i64 n, u64 c, const CharacterTable& table, u64 chi) {
  require(c >= 1, "kloosterman: c must be positive");
  const u64 q = table.modulus();
  const u64 mod = arith::checked_mul(c, q);
  const u64 mm = arith::reduce(m, mod), nn = arith::reduce(n, mod);
  CompensatedSum<cplx> s;
  for (u64 a = 1; a < mod; ++a) {
    if (arith::gcd(a, mod) != 1) continue;
    const u64 ab = arith::mod_inverse(static_cast<i64>(a), mod);
    const u64 r = (arith::mul_mod(a, mm, mod) + arith::mul_mod(ab, nn, mod)) % mod;
    const u64 e = *table.exponent(chi, static_cast<i64>(a));
    // combine both phases over the common denominator mod * (q - 1)
    const i128 num = static_cast<i128>(r) * (q - 1) + static_cast<i128>(e) * mod;
    const u64 den = arith::checked_mul(mod, q - 1);
    s += root_of_unity(static_cast<long long>(mod128(num, den)), static_cast<long long>(den));
  }
  return {s.value(), mod, m, n, chi};
}

cplx restricted_kloosterman(i64 u, i64 v, u64 c, u64 q, u64 r) {
  require(c >= 1 && q >= 1, "restricted_kloosterman: moduli must be positive");
  const u64 mod = arith::checked_mul(c, q);
  const u64 uu = arith::reduce(u, mod), vv = arith::reduce(v, mod);
  CompensatedSum<cplx> s;
  for (u64 t = 0; t < c; ++t) {
    const u64 a = (r % q + q * t) % mod;
    if (arith::gcd(a, mod) != 1) continue;
    const u64 ab = arith::mod_inverse(static_cast<i64>(a), mod);
    const u64 ph = (arith::mul_mod(a, uu, mod) + arith::mul_mod(ab, vv, mod)) % mod;
    s += root_of_unity(static_cast<long long>(ph), static_cast<long long>(mod));
  }
  return s.value();
}

WeilCheck weil_check(i64 m, i64 n, const ModulusContext& ctx) {
  const u64 c = ctx.modulus();
  const double obs = std::abs(kloosterman(m, n, ctx).value);
  const u64 g = arith::gcd(arith::gcd(arith::reduce(m, c), arith::reduce(n, c)), c);
  const double bound = static_cast<double>(arith::tau_k(c, 2)) * std::sqrt(static_cast<double>(c)) *
                       std::sqrt(static_cast<double>(g == 0 ? c : g));
  return {obs, bound, obs <= bound * (1.0 + 1e-12) + 1e-12};
}

WeilCheck weil_check(i64 m, i64 n, u64 c) { return weil_check(m, n, ModulusContext(c)); }

CrtSplit kloosterman_crt_split(i64 m, i64 n, u64 c1, u64 c2) {
  require(c1 >= 1 && c2 >= 1, "kloosterman_crt_split: moduli must be positive");
  require(arith::gcd(c1, c2) == 1, "kloosterman_crt_split: parts must be coprime");
  const u64 c = arith::checked_mul(c1, c2);
  const cplx whole = kloosterman(m, n, c).value;
  const u64 c2b = arith::mod_inverse(static_cast<i64>(c2), c1);
  const u64 c1b = arith::mod_inverse(static_cast<i64>(c1), c2);
  const i64 m1 = static_cast<i64>(arith::mul_mod(c2b, arith::reduce(m, c1), c1));
  const i64 n1 = static_cast<i64>(arith::mul_mod(c2b, arith::reduce(n, c1), c1));
  const i64 m2 = static_cast<i64>(arith::mul_mod(c1b, arith::reduce(m, c2), c2));
  const i64 n2 = static_cast<i64>(arith::mul_mod(c1b, arith::reduce(n, c2), c2));
  const cplx prod = kloosterman(m1, n1, c1).value * kloosterman(m2, n2, c2).value;
  return {std::abs(whole), std::abs(prod), whole, prod};
}

// ---- conductor lowering ----

ConductorSides conductor_lowering_sides(u64 c, u64 q, u64 m, u64 n, i64 u, i64 v, QbarMode mode, bool strict) {
  require(c >= 1 && q >= 1 && m >= 1 && n >= 1, "conductor_lowering: c, q, m, n must be positive");
  const u64 cmn = arith::checked_mul(arith::checked_mul(c, m), n);
  require(arith::gcd(cmn, q) == 1, "conductor_lowering: need (cmn, q) = 1");
  if (strict) require(arith::gcd(m * n, c) == 1, "conductor_lowering: strict mode needs (mn, c) = 1");

  // lhs: a mod cq, a == mbar n (mod q)
  const u64 cq = arith::checked_mul(c, q);
  const u64 r = arith::mul_mod(arith::mod_inverse(static_cast<i64>(m), q), n % q, q);
  const cplx lhs = restricted_kloosterman(u, v, c, q, r);

  // rhs over the common denominator D = c q m n
  const u64 D = arith::checked_mul(cq, m * n);
  const u64 qbar = mode == QbarMode::ModMNC ? arith::mod_inverse(static_cast<i64>(q), cmn)
                                             : arith::mod_inverse(static_cast<i64>(q), c);
  const i128 base = static_cast<i128>(n) * n * u + static_cast<i128>(m) * m * v;
  CompensatedSum<cplx> s;
  const ModulusContext ctx(c);
  for (std::size_t i = 0; i < ctx.units().size(); ++i) {
    const i128 x = ctx.units()[i], xb = ctx.inverses()[i];
    const i128 t1 = static_cast<i128>(qbar) * (static_cast<i128>(m) * x - n) % D * u % D * q % D * n;
    const i128 t2 = static_cast<i128>(qbar) * (static_cast<i128>(n) * xb - m) % D * v % D * q % D * m;
    const u64 num = mod128(base + t1 + t2, D);
    s += root_of_unity(static_cast<long long>(num), static_cast<long long>(D));
  }
  return {lhs, s.value()};
}

// ---- Petersson ----

PeterssonValue petersson_geometric(u64 m, u64 n, const CharacterTable& table, u64 chi, int k, u64 c_max) {
  require(k >= 3 && k % 2 == 1, "petersson_geometric: k must be odd and >= 3");
  require(m >= 1 && n >= 1, "petersson_geometric: m, n must be positive");
  const u64 q = table.modulus();
  const cplx delta = m == n ? 1.0 : 0.0;
  const double root_mn = std::sqrt(static_cast<double>(m) * static_cast<double>(n));
  CompensatedSum<cplx> s;
  for (u64 c = 1; c <= c_max; ++c) {
    const double cq = static_cast<double>(c * q);
    const double x = 4.0 * kPi * root_mn / cq;
    const cplx kl = kloosterman(static_cast<i64>(m), static_cast<i64>(n), c, table, chi).value;
    s += kl / cq * special::bessel_j(k - 1, x);
  }
  const cplx value = delta + kTwoPi * ipow(-k) * s.value();

  // tail: |S| <= cq and |J_{k-1}(x)| <= min(1, (x/2)^{k-1}/(k-1)!)
  double count_one = 0.0;
  u64 c = c_max + 1;
  auto jb = [&](u64 cc) { return special::bessel_j_bound(k - 1, 4.0 * kPi * root_mn / static_cast<double>(cc * q)); };
  while (jb(c) >= 1.0) {
    count_one += 1.0;
    ++c;
  }
  const double s_exp = k - 1;
  const double a_coef = jb(c) * std::pow(static_cast<double>(c), s_exp);  // bound = a_coef c^{-s}
  const double cd = static_cast<double>(c);
  const double power_tail = a_coef * (std::pow(cd, -s_exp) + std::pow(cd, 1.0 - s_exp) / (s_exp - 1.0));
  return {value, kTwoPi * (count_one + power_tail), delta};
}

// ---- suites ----

scan::ScanReport orthogonality_suite(const std::vector<u64>& qs) {
  scan::ScanReport rep;
  rep.name = "orthogonality";
  rep.range = "all (m,n) mod q, k in {3,4}";
  for (u64 q : qs) {
    const CharacterTable t(q);
    for (int k : {3, 4})
      for (u64 m = 0; m < q; ++m)
        for (u64 n = 0; n < q; ++n) {
          const cplx got = orthogonality_avg(static_cast<i64>(m), static_cast<i64>(n), t, k);
          const double want = orthogonality_expected(static_cast<i64>(m), static_cast<i64>(n), q, k);
          const double err = std::abs(got - want);
          rep.record(key_of({{"q", q}, {"k", k}, {"m", m}, {"n", n}}), err, 1e-12, err <= 1e-12);
        }
  }
  return rep;
}

scan::ScanReport weil_suite(u64 c_max, i64 mn_max) {
  scan::ScanReport rep;
  rep.name = "kloosterman-weil";
  rep.range = "c <= " + std::to_string(c_max) + ", 1 <= m,n <= " + std::to_string(mn_max);
  for (u64 c = 1; c <= c_max; ++c) {
    const ModulusContext ctx(c);
    for (i64 m = 1; m <= mn_max; ++m)
      for (i64 n = 1; n <= mn_max; ++n) {
        const auto w = weil_check(m, n, ctx);
        rep.record(key_of({{"c", c}, {"m", m}, {"n", n}}), w.observed / w.bound, w.bound, w.ok);
      }
  }
  return rep;
}

scan::ScanReport crt_suite(int samples, u64 seed, u64 c_max) {
  scan::ScanReport rep;
  rep.name = "kloosterman-crt";
  rep.range = std::to_string(samples) + " random coprime splits, c1 c2 <= " + std::to_string(c_max);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dc(2, c_max / 2);
  std::uniform_int_distribution<i64> dmn(1, 50);
  int done = 0;
  while (done < samples) {
    const u64 c1 = dc(rng), c2 = dc(rng);
    if (arith::gcd(c1, c2) != 1 || c1 * c2 > c_max) continue;
    const i64 m = dmn(rng), n = dmn(rng);
    const auto sp = kloosterman_crt_split(m, n, c1, c2);
    const double err = std::abs(sp.whole_value - sp.product_value);
    const double tol = 1e-9 * std::max(1.0, sp.whole);
    rep.record(key_of({{"c1", c1}, {"c2", c2}, {"m", m}, {"n", n}}), err, tol, err <= tol);
    ++done;
  }
  return rep;
}

scan::ScanReport conductor_lowering_suite(const std::vector<u64>& qs, u64 c_max, u64 mn_max, i64 uv_max) {
  scan::ScanReport rep;
  rep.name = "conductor-lowering";
  rep.range = "c <= " + std::to_string(c_max) + ", m,n <= " + std::to_string(mn_max) + ", 0 <= u,v <= " +
              std::to_string(uv_max) + ", gcd(mn, cq) = 1";
  for (u64 q : qs)
    for (u64 c = 1; c <= c_max; ++c)
      for (u64 m = 1; m <= mn_max; ++m)
        for (u64 n = 1; n <= mn_max; ++n) {
          if (arith::gcd(c * m * n, q) != 1 || arith::gcd(m * n, c) != 1) continue;
          for (i64 u = 0; u <= uv_max; ++u)
            for (i64 v = 0; v <= uv_max; ++v) {
              const auto sides = conductor_lowering_sides(c, q, m, n, u, v);
              const double err = std::abs(sides.lhs - sides.rhs);
              rep.record(key_of({{"q", q}, {"c", c}, {"m", m}, {"n", n}, {"u", u}, {"v", v}}), err, 1e-9,
                         err <= 1e-9);
            }
        }
  return rep;
}

ExploratoryMap conductor_lowering_explore(const std::vector<u64>& qs, u64 c_max, u64 mn_max, i64 uv_max,
                                          QbarMode mode) {
  ExploratoryMap out;
  for (u64 q : qs)
    for (u64 c = 1; c <= c_max; ++c)
      for (u64 m = 1; m <= mn_max; ++m)
        for (u64 n = 1; n <= mn_max; ++n) {
          if (arith::gcd(c * m * n, q) != 1) continue;
          for (i64 u = 0; u <= uv_max; ++u)
            for (i64 v = 0; v <= uv_max; ++v) {
              const auto sides = conductor_lowering_sides(c, q, m, n, u, v, mode, false);
              const double dev = std::abs(sides.lhs - sides.rhs);
              ++out.evaluated;
              if (dev > 1e-9) {
                ++out.mismatched;
                if (out.samples.size() < 16) out.samples.push_back({c, q, m, n, u, v, dev});
              }
            }
        }
  return out;
}

}  // namespace sixmoment::expsums
