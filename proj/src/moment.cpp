#include "sixmoment/moment.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <tuple>
#include <mutex>
#include <sstream>
#include <thread>

#include "sixmoment/error.hpp"
#include "sixmoment/expsums.hpp"
#include "sixmoment/lemmas.hpp"
#include "sixmoment/special.hpp"

namespace sixmoment::moment {

void MomentConfig::validate() const {
  require(arith::is_prime(q) && q >= 3, "MomentConfig: q must be an odd prime");
  require(k >= 3 && k % 2 == 1, "MomentConfig: k must be odd and at least 3");
  require(epsilon() > 0.0 && epsilon() <= 0.25, "MomentConfig: tuple cutoff epsilon must be in (0, 0.25]");
  require(mellin_height > 0 && mellin_nodes >= 16, "MomentConfig: Mellin height and nodes must be positive");
  require(c_fixed > 0 && c_scale > 0, "MomentConfig: c cutoffs must be positive");
  require(workers >= 1, "MomentConfig: workers must be at least 1");
}

namespace {

cplx log_gamma_factor(cplx s, int k) {
  const double h = 0.5 * k;
  return -s * std::log(kTwoPi) + special::log_gamma(cplx(h) + s) - special::log_gamma(h);
}

}  // namespace

// ---- U ----

UWeight::UWeight(int k, double height, int nodes) : k_(k) {
  require(k >= 1, "UWeight: k must be positive");
  require(height > 0 && nodes >= 16, "UWeight: height and nodes must be positive");
  t0_ = -height;
  h_ = 2.0 * height / nodes;
  for (Line* line : {&right_, &left_}) {
    line->sigma = line == &right_ ? 2.0 : -1.0;
    line->g.resize(static_cast<std::size_t>(nodes) + 1);
    for (int j = 0; j <= nodes; ++j) {
      const cplx s(line->sigma, t0_ + j * h_);
      line->g[j] = h_ / kTwoPi * std::exp(3.0 * log_gamma_factor(s, k) + 3.0 * s * s) / s;
    }
  }
}

double UWeight::eval(const Line& line, double t0, double h, double y, double* imag) {
  // y^{-s} = y^{-sigma} e^{-i t log y}, rotated node by node
  const double ly = std::log(y);
  const cplx step = std::exp(cplx(0.0, -h * ly));
  cplx rot = std::exp(cplx(0.0, -t0 * ly));
  CompensatedSum<cplx> acc;
  for (std::size_t j = 0; j < line.g.size(); ++j) {
    if (j % 64 == 0) rot = std::exp(cplx(0.0, -(t0 + static_cast<double>(j) * h) * ly));
    acc += line.g[j] * rot;
    rot *= step;
  }
  const cplx v = std::exp(-line.sigma * ly) * acc.value();
  if (imag) *imag = v.imag();
  return v.real();
}

double UWeight::operator()(double y, double* imag) const {
  require(y > 0 && std::isfinite(y), "u_weight: y must be positive");
  if (y >= 1.0) return eval(right_, t0_, h_, y, imag);
  return 1.0 + eval(left_, t0_, h_, y, imag);
}

double u_weight(double y, int k, double height, int nodes) {
  static std::mutex mu;
  static std::map<std::tuple<int, double, int>, std::unique_ptr<UWeight>> cache;
  const UWeight* w;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{k, height, nodes}];
    if (!slot) slot = std::make_unique<UWeight>(k, height, nodes);
    w = slot.get();
  }
  return (*w)(y);
}

// ---- local factors ----

namespace {

i64 tau3_pp(int b) { return b < 0 ? 0 : static_cast<i64>(b + 1) * (b + 2) / 2; }

std::vector<i64> series_mul(const std::vector<i64>& a, const std::vector<i64>& b, std::size_t order) {
  std::vector<i64> out(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<i64> one_minus_t_pow(int e, int step, std::size_t order) {
  // (1 - t^step)^e for integer e (negative allowed)
  std::vector<i64> out(order + 1, 0);
  out[0] = 1;
  if (e >= 0) {
    i64 c = 1;
    for (int i = 0; i <= e && static_cast<std::size_t>(i * step) <= order; ++i) {
      out[static_cast<std::size_t>(i * step)] = (i % 2 ? -c : c);
      c = c * (e - i) / (i + 1);
    }
  } else {
    const int f = -e;  // (1 - x)^{-f} = sum C(i+f-1, i) x^i
    i64 c = 1;
    for (int i = 0; static_cast<std::size_t>(i * step) <= order; ++i) {
      out[static_cast<std::size_t>(i * step)] = c;
      c = c * (i + f) / (i + 1);
    }
  }
  return out;
}

}  // namespace

std::vector<i64> diagonal_local_factor(int order, bool is_q) {
  require(order >= 0 && order <= 40, "diagonal_local_factor: order must be in 0..40");
  std::vector<i64> c(static_cast<std::size_t>(order) + 1, 0);
  if (is_q) {
    for (int n = 0; n <= order; ++n) c[n] = tau3_pp(n) * tau3_pp(n);
    return c;
  }
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int a2 = 0; a2 <= 1; ++a2)
      for (int b1 = 0; 3 * a1 + 2 * b1 <= order; ++b1)
        for (int n = 0; 3 * a1 + 2 * b1 + n <= order; ++n) {
          const int b2 = a1 + b1 - a2, m = a1 + n - a2;
          if (b2 < 0 || m < 0) continue;
          const i64 sign = (a1 + a2) % 2 ? -1 : 1;
          c[3 * a1 + 2 * b1 + n] += sign * tau3_pp(b1) * tau3_pp(n) * tau3_pp(b2) * tau3_pp(m);
        }
  return c;
}

std::vector<i64> diagonal_local_factor(u64 p, int order, u64 q) {
  require(arith::is_prime(p), "diagonal_local_factor: p must be prime");
  return diagonal_local_factor(order, q != 0 && p == q);
}

std::vector<i64> h_factor_check(u64 p, int order, u64 q) {
  const auto d = diagonal_local_factor(p, order, q);
  return series_mul(d, one_minus_t_pow(9, 1, static_cast<std::size_t>(order)), static_cast<std::size_t>(order));
}

scan::ScanReport h_factor_suite(int n_primes, int order) {
  scan::ScanReport rep;
  rep.name = "diagonal-euler";
  rep.range = "first " + std::to_string(n_primes) + " primes, t-order " + std::to_string(order);
  const auto primes = arith::primes_up_to(1000);
  require(static_cast<std::size_t>(n_primes) <= primes.size(), "h_factor_suite: too many primes requested");
  for (int i = 0; i < n_primes; ++i) {
    const u64 p = primes[i];
    const auto d = diagonal_local_factor(p, order, 0);
    const auto h = h_factor_check(p, order, 0);
    const auto hq = h_factor_check(p, order, p);
    const std::string key = "p=" + std::to_string(p);
    rep.record(key + ",t0", std::abs(static_cast<double>(h[0] - 1)), 0.0, h[0] == 1 && d[0] == 1);
    rep.record(key + ",t1", std::abs(static_cast<double>(h[1])), 0.0, h[1] == 0 && d[1] == 9);
    rep.record(key + ",q-t1", std::abs(static_cast<double>(hq[1])), 0.0, hq[1] == 0);
    // closed form vs enumeration at t = 1/p
    const double t = 1.0 / static_cast<double>(p);
    double series = 0.0, tp = 1.0;
    const auto deep = diagonal_local_factor(40, false);
    for (std::size_t e = 0; e < deep.size(); ++e, tp *= t) series += static_cast<double>(deep[e]) * tp;
    const double closed = diagonal_local_value(t, false).real();
    const double dev = std::abs(series - closed) / closed;
    if (p > 2) rep.record(key + ",closed", dev, 1e-12, dev <= 1e-12);
  }
  const auto dq = diagonal_local_factor(2, true);
  rep.stats["q_factor_t2"] = static_cast<double>(dq[2]);
  return rep;
}

cplx diagonal_local_value(cplx t, bool is_q) {
  const cplx one(1.0);
  const auto s0 = [&](cplx x) { return (one + 4.0 * x + x * x) / std::pow(one - x, 5); };
  if (is_q) return s0(t);
  const auto s1 = [&](cplx x) { return 3.0 * (one + x) / std::pow(one - x, 5); };
  const cplx t2 = t * t, t3 = t2 * t;
  return (one + t3) * s0(t2) * s0(t) - 2.0 * t3 * s1(t2) * s1(t);
}

// ---- H ----

namespace {

struct HAccel {
  int e2, e3;
  double r4;  // leading remainder coefficient after removing zeta(2s), zeta(3s)
};

const HAccel& h_accel() {
  static const HAccel acc = [] {
    const auto h = h_factor_check(2, 8, 0);
    HAccel a{static_cast<int>(h[2]), static_cast<int>(h[3]), 0.0};
    auto r = series_mul(h, one_minus_t_pow(a.e2, 2, 8), 8);
    r = series_mul(r, one_minus_t_pow(a.e3, 3, 8), 8);
    require(r[1] == 0 && r[2] == 0 && r[3] == 0, "h_function: acceleration failed to clear low orders");
    a.r4 = static_cast<double>(r[4]);
    return a;
  }();
  return acc;
}

const std::vector<u64>& primes_cached(u64 limit) {
  static std::mutex mu;
  static std::map<u64, std::vector<u64>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[limit];
  if (v.empty()) v = arith::primes_up_to(limit);
  return v;
}

}  // namespace

HValue h_function(cplx s, u64 q, u64 p_max) {
  require(s.real() > 0.5, "h_function: Re s must exceed 1/2");
  const auto& a = h_accel();
  const cplx one(1.0);
  cplx logprod = 0.0;
  bool q_seen = false;
  const auto local = [&](u64 p) {
    const cplx t = std::exp(-s * std::log(static_cast<double>(p)));
    const bool is_q = p == q;
    const cplx lp = diagonal_local_value(t, is_q) * std::pow(one - t, 9) *
                    std::pow(one - t * t, a.e2) * std::pow(one - t * t * t, a.e3);
    return std::log(lp);
  };
  for (u64 p : primes_cached(p_max)) {
    logprod += local(p);
    if (p == q) q_seen = true;
  }
  if (!q_seen && q != 0) logprod += local(q);
  const cplx z2 = special::riemann_zeta(2.0 * s), z3 = special::riemann_zeta(3.0 * s);
  const cplx val = std::exp(logprod) * std::pow(z2, a.e2) * std::pow(z3, a.e3);
  const double sig = s.real(), P = static_cast<double>(p_max);
  const double tail = std::abs(a.r4) * std::pow(P, 1.0 - 4.0 * sig) / ((4.0 * sig - 1.0) * std::log(P));
  return {val, tail};
}

R1Leading r1_leading(u64 q, int k, u64 p_max) {
  require(arith::is_prime(q), "r1_leading: q must be prime");
  require(k >= 3 && k % 2 == 1, "r1_leading: k must be odd and at least 3");
  const auto h = h_function(1.0, q, p_max);
  R1Leading r;
  r.h1 = h.value.real();
  r.h1_tail = h.tail;
  double fact9 = 1.0;
  for (int i = 2; i <= 9; ++i) fact9 *= i;
  r.value = r.h1 * std::pow(1.5 * std::log(static_cast<double>(q)), 9) / fact9;
  return r;
}

double h1_partial_product(u64 q, u64 p_max) {
  CompensatedSum<double> logprod;
  const auto local = [&](u64 p) {
    const double t = 1.0 / static_cast<double>(p);
    return std::log(diagonal_local_value(t, p == q).real() * std::pow(1.0 - t, 9));
  };
  bool q_seen = false;
  for (u64 p : primes_cached(p_max)) {
    logprod += local(p);
    q_seen = q_seen || p == q;
  }
  if (!q_seen) logprod += local(q);
  return std::exp(logprod.value());
}

double r1_full(u64 q, int k, double radius, int nodes) {
  require(radius > 0 && radius < 0.5, "r1_full: radius must be in (0, 1/2)");
  const double lq = 1.5 * std::log(static_cast<double>(q));
  CompensatedSum<cplx> acc;
  for (int j = 0; j < nodes; ++j) {
    const cplx u = radius * std::exp(cplx(0.0, kTwoPi * (j + 0.5) / nodes));
    const cplx z = special::riemann_zeta(1.0 + u);
    const cplx f = std::exp(lq * u + 3.0 * log_gamma_factor(u, k) + 3.0 * u * u) * std::pow(z, 9) *
                   h_function(1.0 + u, q, 10000).value;
    acc += f;  // f(u)/u * u
  }
  return acc.value().real() / nodes;
}

// ---- diagonal sum ----

namespace {

// Visits every diagonal tuple (a1,b1,n; a2,b2,m) with x = a1^3 b1^2 n <= X, coprime to q.
template <class F>
u64 for_each_diagonal_tuple(u64 X, u64 q, const arith::Sieve& sv, F&& visit) {
  u64 count = 0;
  for (u64 a1 = 1; a1 * a1 * a1 <= X; ++a1) {
    const int mu1 = sv.mobius(static_cast<std::uint32_t>(a1));
    if (mu1 == 0 || a1 % q == 0) continue;
    const u64 a3 = a1 * a1 * a1;
    for (u64 b1 = 1; a3 * b1 * b1 <= X; ++b1) {
      if (b1 % q == 0) continue;
      const u64 ab = a1 * b1;
      const auto& divs = arith::squarefree_divisors(sv.factorize(static_cast<std::uint32_t>(ab)));
      const i64 t_b1 = sv.tau3(static_cast<std::uint32_t>(b1));
      for (u64 n = 1; a3 * b1 * b1 * n <= X; ++n) {
        const u64 x = a3 * b1 * b1 * n;
        const i64 w1 = mu1 * t_b1 * static_cast<i64>(sv.tau3(static_cast<std::uint32_t>(n)));
        i64 inner = 0;
        for (const auto& [a2, mu2] : divs) {
          if ((a1 * n) % a2 != 0) continue;
          const u64 b2 = ab / a2, m = a1 * n / a2;
          inner += mu2 * static_cast<i64>(sv.tau3(static_cast<std::uint32_t>(b2))) *
                   static_cast<i64>(sv.tau3(static_cast<std::uint32_t>(m)));
          ++count;
        }
        if (inner != 0) visit(x, w1 * inner);
      }
    }
  }
  return count;
}

}  // namespace

std::vector<i64> diagonal_coefficients_brute(u64 X, u64 q) {
  require(X >= 1 && X <= 50'000'000, "diagonal_coefficients: X must be in 1..5e7");
  const arith::Sieve sv(static_cast<std::uint32_t>(X));
  std::vector<i64> a(X + 1, 0);
  for_each_diagonal_tuple(X, q, sv, [&](u64 x, i64 w) { a[x] += w; });
  return a;
}

std::vector<i64> diagonal_coefficients_euler(u64 X, u64 q) {
  require(X >= 1 && X <= 50'000'000, "diagonal_coefficients: X must be in 1..5e7");
  const arith::Sieve sv(static_cast<std::uint32_t>(X));
  const auto dp = diagonal_local_factor(40, false), dq = diagonal_local_factor(40, true);
  std::vector<i64> a(X + 1, 0);
  for (u64 x = 1; x <= X; ++x) {
    i64 v = 1;
    const auto f = sv.factorize(static_cast<std::uint32_t>(x));
    for (const auto& pp : f.factors())
      v *= (pp.prime == q ? dq : dp)[static_cast<std::size_t>(pp.exponent)];
    a[x] = v;
  }
  return a;
}

DiagonalDirect diagonal_direct(const MomentConfig& cfg, bool unit_weight, double cutoff_override) {
  cfg.validate();
  const double Q = std::pow(static_cast<double>(cfg.q), 1.5);
  const double X = cutoff_override > 0 ? cutoff_override
                                       : std::pow(static_cast<double>(cfg.q), cfg.tuple_cutoff_exponent);
  const auto Xi = static_cast<u64>(std::floor(X));
  const u64 Xt = unit_weight ? Xi : 2 * Xi;
  require(Xt <= 50'000'000, "diagonal_direct: tuple cutoff too large");
  const arith::Sieve sv(static_cast<std::uint32_t>(std::max<u64>(Xt, 2)));
  std::vector<i64> a(Xt + 1, 0);
  DiagonalDirect out{};
  out.cutoff = X;
  out.tuples = 0;
  const u64 cnt = for_each_diagonal_tuple(Xt, cfg.q, sv, [&](u64 x, i64 w) { a[x] += w; });
  const UWeight U(cfg.k, cfg.mellin_height, cfg.mellin_nodes);
  CompensatedSum<double> main, tail;
  for (u64 x = 1; x <= Xt; ++x) {
    if (a[x] == 0) continue;
    const double u = unit_weight ? 1.0 : U(static_cast<double>(x) / Q);
    const double term = static_cast<double>(a[x]) * u * u / static_cast<double>(x);
    (x <= Xi ? main : tail) += term;
  }
  out.value = main.value();
  out.tail_estimate = tail.value();
  out.tuples = unit_weight ? cnt : cnt;  // includes the tail window
  return out;
}

double diagonal_contour(u64 q, int k, double sigma, double height, double step) {
  require(arith::is_prime(q), "diagonal_contour: q must be prime");
  require(sigma > 0 && sigma < 1 && height > 0 && step > 0, "diagonal_contour: bad contour parameters");
  const int M = static_cast<int>(std::ceil(height / step));
  const double lq = 1.5 * std::log(static_cast<double>(q));
  std::vector<cplx> g(2 * M + 1), z(4 * M + 1);
  for (int i = -M; i <= M; ++i) {
    const cplx s(sigma, i * step);
    g[i + M] = std::exp(lq * s + 3.0 * log_gamma_factor(s, k) + 3.0 * s * s) / s;
  }
  for (int j = -2 * M; j <= 2 * M; ++j) {
    const cplx u(2.0 * sigma, j * step);
    z[j + 2 * M] = std::pow(special::riemann_zeta(1.0 + u), 9) * h_function(1.0 + u, q, 10000).value;
  }
  CompensatedSum<cplx> acc;
  for (int i1 = 0; i1 <= 2 * M; ++i1) {
    cplx row = 0.0;
    for (int i2 = 0; i2 <= 2 * M; ++i2) row += g[i2] * z[i1 + i2];
    acc += g[i1] * row;
  }
  return (acc.value() * (step * step / (4.0 * kPi * kPi))).real();
}

DiagonalBreakdown diagonal_breakdown(const MomentConfig& cfg) {
  cfg.validate();
  DiagonalBreakdown b{};
  b.q = cfg.q;
  b.k = cfg.k;
  const auto d = diagonal_direct(cfg);
  b.direct_value = d.value;
  b.direct_tail = d.tail_estimate;
  b.contour_value = diagonal_contour(cfg.q, cfg.k);
  const auto r1 = r1_leading(cfg.q, cfg.k);
  b.r1_leading = r1.value;
  b.h1 = r1.h1;
  b.r1_full = r1_full(cfg.q, cfg.k);
  b.ratio_direct_r1 = b.direct_value / b.r1_leading;
  b.ratio_contour_r1 = b.contour_value / b.r1_leading;
  return b;
}

}  // namespace sixmoment::moment

namespace sixmoment::moment {

namespace {

// Units of Z/(cq) bucketed by residue mod q, with inverses, and e(j/(cq)).
struct RestrictedTable {
  u64 mod;
  std::vector<std::vector<std::pair<u64, u64>>> by_residue;
  std::vector<cplx> roots;

  RestrictedTable(u64 c, u64 q) : mod(c * q), by_residue(q), roots(c * q) {
    for (u64 a = 1; a < mod; ++a)
      if (arith::gcd(a, mod) == 1)
        by_residue[a % q].push_back({a, arith::mod_inverse(static_cast<i64>(a), mod)});
    for (u64 j = 0; j < mod; ++j) roots[j] = root_of_unity(static_cast<long long>(j), static_cast<long long>(mod));
  }
  cplx sum(u64 r, u64 A, u64 B) const {
    const u64 Am = A % mod, Bm = B % mod;
    cplx s = 0.0;
    for (const auto& [a, ab] : by_residue[r]) s += roots[(a * Am + ab * Bm) % mod];
    return s;
  }
};

struct Side {
  u64 a, b, n;  // a squarefree, a^3 b^2 n <= X
  double weight;  // mu(a) tau3(b) tau3(n) U(a^3 b^2 n / Q) / sqrt(a^3 b^2 n)
};

}  // namespace

MomentEstimate moment_bound_estimate(const MomentConfig& cfg) {
  cfg.validate();
  require(cfg.q <= 31, "moment_bound_estimate: q must be at most 31 for the full off-diagonal");
  const u64 q = cfg.q;
  const int nu = cfg.k - 1;
  const double Q = std::pow(static_cast<double>(q), 1.5);
  const double X = std::pow(static_cast<double>(q), cfg.tuple_cutoff_exponent);
  const auto Xi = static_cast<u64>(std::floor(X));
  const arith::Sieve sv(static_cast<std::uint32_t>(std::max<u64>(Xi, 2)));
  const UWeight U(cfg.k, cfg.mellin_height, cfg.mellin_nodes);

  MomentEstimate est{};
  est.q = q;
  est.k = cfg.k;
  est.diagonal = diagonal_direct(cfg).value;

  std::vector<Side> sides;
  for (u64 a = 1; a * a * a <= Xi; ++a) {
    const int mu = sv.mobius(static_cast<std::uint32_t>(a));
    if (mu == 0 || a % q == 0) continue;
    for (u64 b = 1; a * a * a * b * b <= Xi; ++b) {
      if (b % q == 0) continue;
      for (u64 n = 1; a * a * a * b * b * n <= Xi; ++n) {
        const double x = static_cast<double>(a * a * a * b * b * n);
        const double w = mu * static_cast<double>(sv.tau3(static_cast<std::uint32_t>(b))) *
                         static_cast<double>(sv.tau3(static_cast<std::uint32_t>(n))) * U(x / Q) / std::sqrt(x);
        sides.push_back({a, b, n, w});
      }
    }
  }

  double nufact = 1.0;
  for (int i = 2; i <= nu; ++i) nufact *= i;
  const auto c_cut = [&](const Side& s1, const Side& s2) {
    if (cfg.c_cutoff_mode == MomentConfig::CCutoff::Fixed) return cfg.c_scale * cfg.c_fixed;
    return cfg.c_scale * std::pow(static_cast<double>(q), -2.0 / 3.0) *
           std::sqrt(static_cast<double>(s1.a * s2.a * s1.n * s2.n));
  };
  u64 c_max = 0;
  for (const auto& s1 : sides)
    for (const auto& s2 : sides) c_max = std::max(c_max, static_cast<u64>(std::floor(c_cut(s1, s2))));
  std::vector<std::unique_ptr<RestrictedTable>> tables(c_max + 1);
  for (u64 c = 1; c <= c_max; ++c) tables[c] = std::make_unique<RestrictedTable>(c, q);

  // per first-side partial sums, reduced in index order
  const std::size_t ns = sides.size();
  std::vector<double> part(ns, 0.0), tail(ns, 0.0);
  std::vector<u64> terms(ns, 0);
  const auto work = [&](unsigned w) {
    for (std::size_t i = w; i < ns; i += cfg.workers) {
      const auto& s1 = sides[i];
      CompensatedSum<double> acc, tacc;
      u64 cnt = 0;
      for (const auto& s2 : sides) {
        const u64 ab1 = (s1.a * s1.b) % q, ab2 = (s2.a * s2.b) % q;
        const u64 r = arith::mul_mod(arith::mod_inverse(static_cast<i64>(ab1), q), ab2, q);
        const double pre = s1.weight * s2.weight;
        const double root = std::sqrt(static_cast<double>(s1.a * s1.n * s2.a * s2.n));
        const double C = c_cut(s1, s2);
        const auto cC = static_cast<u64>(std::floor(C));
        for (u64 c = 1; c <= cC; ++c) {
          const double arg = 4.0 * kPi * root / static_cast<double>(c * q);
          const cplx R = tables[c]->sum(r, s2.a * s2.n, s1.a * s1.n);
          acc += pre / static_cast<double>(c) * special::bessel_j(nu, arg) * 2.0 *
                 (ipow(-cfg.k) * R).real();
          cnt += tables[c]->by_residue[r].size();
        }
        // c > C: |J_nu(y)| <= (y/2)^nu / nu!, |K R| <= 2c
        const double c0 = static_cast<double>(cC + 1);
        const double y0 = 4.0 * kPi * root / static_cast<double>(q);
        const double zeta_tail = std::pow(c0, -nu) + (nu > 1 ? std::pow(c0, 1.0 - nu) / (nu - 1) : 0.0);
        tacc += std::abs(pre) * 2.0 * std::pow(y0 / 2.0, nu) / nufact * zeta_tail;
      }
      part[i] = acc.value();
      tail[i] = tacc.value();
      terms[i] = cnt;
    }
  };
  if (cfg.workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < cfg.workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  CompensatedSum<double> od, odt;
  for (std::size_t i = 0; i < ns; ++i) {
    od += part[i];
    odt += tail[i];
    est.c_terms += terms[i];
  }
  if (est.c_terms > cfg.node_limit) fail(ErrorKind::BudgetExceeded, "moment_bound_estimate: node limit exceeded");
  const double scale = kTwoPi / static_cast<double>(q);
  est.offdiag_partial = scale * od.value();
  est.offdiag_tail_bound = scale * odt.value();
  est.blocks = static_cast<u64>(ns) * ns;
  est.normalized = (est.diagonal + est.offdiag_partial) / std::pow(std::log(static_cast<double>(q)), 9);
  return est;
}

PeterssonConsistency petersson_consistency(u64 q, int k, u64 a1, u64 b1, u64 n, u64 a2, u64 b2, u64 m,
                                           u64 c_max) {
  require(arith::is_prime(q), "petersson_consistency: q must be prime");
  require(arith::gcd(a1 * b1 * a2 * b2, q) == 1, "petersson_consistency: tuple must be coprime to q");
  const expsums::CharacterTable table(q);
  const int nu = k - 1;
  const double root = std::sqrt(static_cast<double>(a1 * n * a2 * m));
  const i64 mm = static_cast<i64>(a2 * m), nn = static_cast<i64>(a1 * n);
  CompensatedSum<cplx> lhs, rhs;
  const u64 r = arith::mul_mod(arith::mod_inverse(static_cast<i64>((a1 * b1) % q), q), (a2 * b2) % q, q);
  for (u64 c = 1; c <= c_max; ++c) {
    const double J = special::bessel_j(nu, 4.0 * kPi * root / static_cast<double>(c * q));
    const double w = kTwoPi / static_cast<double>(c * q) * J;
    cplx avg = 0.0;
    for (u64 j = 0; j < table.order(); ++j) {
      if (table.is_odd(j) != (k % 2 == 1)) continue;
      avg += table.value(j, static_cast<i64>(a1 * b1)) * std::conj(table.value(j, static_cast<i64>(a2 * b2))) *
             expsums::kloosterman(mm, nn, c, table, j).value;
    }
    lhs += w * ipow(-k) * (2.0 / static_cast<double>(q - 1)) * avg;
    rhs += w * lemmas::kappa_apply(expsums::restricted_kloosterman(mm, nn, c, q, r), k);
  }
  return {lhs.value(), rhs.value()};
}

}  // namespace sixmoment::moment

namespace sixmoment::moment {

scan::ScanReport diagonal_suite(const std::vector<u64>& qs, int k) {
  scan::ScanReport rep;
  rep.name = "diagonal";
  std::ostringstream range;
  range << "q in {";
  for (std::size_t i = 0; i < qs.size(); ++i) range << (i ? "," : "") << qs[i];
  range << "}, k=" << k << ", X = q^1.6";
  rep.range = range.str();
  // unit weight: tuple enumeration vs Euler-product coefficients
  for (u64 X : {100, 200})
    for (u64 q : {101, 7}) {
      const auto a = diagonal_coefficients_brute(X, q), b = diagonal_coefficients_euler(X, q);
      u64 bad = 0;
      for (u64 x = 1; x <= X; ++x) bad += a[x] != b[x];
      MomentConfig cfg;
      cfg.q = q;
      cfg.k = k;
      const double direct = diagonal_direct(cfg, true, static_cast<double>(X)).value;
      CompensatedSum<double> euler;
      for (u64 x = 1; x <= X; ++x) euler += static_cast<double>(b[x]) / static_cast<double>(x);
      const std::string key = "unit,X=" + std::to_string(X) + ",q=" + std::to_string(q);
      rep.record(key + ",coeffs", static_cast<double>(bad), 0.0, bad == 0);
      rep.record(key + ",sum", std::abs(direct - euler.value()), 1e-12, std::abs(direct - euler.value()) <= 1e-12);
    }
  {
    const double h4 = h1_partial_product(101, 10000), h5 = h1_partial_product(101, 100000);
    const double dev = std::abs(h4 - h5) / h5;
    rep.record("H(1),p<=1e4 vs 1e5", dev, 1e-4, dev < 1e-4);
    rep.stats["h1_q101"] = h5;
  }
  double prev = 0.0;
  for (u64 q : qs) {
    MomentConfig cfg;
    cfg.q = q;
    cfg.k = k;
    const auto b = diagonal_breakdown(cfg);
    const std::string key = "q=" + std::to_string(q);
    rep.record(key + ",ratio", b.ratio_direct_r1, 3.0, b.ratio_direct_r1 >= 0.3 && b.ratio_direct_r1 <= 3.0);
    rep.record(key + ",positive", b.direct_value, 0.0, b.direct_value > 0 && b.r1_leading > 0);
    if (prev > 0) rep.record(key + ",increase", b.direct_value, prev, b.direct_value > prev);
    prev = b.direct_value;
    rep.stats[key + ",direct"] = b.direct_value;
    rep.stats[key + ",contour"] = b.contour_value;
    rep.stats[key + ",r1_leading"] = b.r1_leading;
    rep.stats[key + ",ratio"] = b.ratio_direct_r1;
    rep.stats[key + ",truncated_fraction"] = (b.contour_value - b.direct_value) / b.contour_value;
  }
  return rep;
}

scan::ScanReport moment_proxy_suite(const std::vector<u64>& qs, int k) {
  scan::ScanReport rep;
  rep.name = "moment-proxy";
  std::ostringstream range;
  range << "q in {";
  for (std::size_t i = 0; i < qs.size(); ++i) range << (i ? "," : "") << qs[i];
  range << "}, k=" << k << ", c <= q^{-2/3} sqrt(a1 a2 n m)";
  rep.range = range.str();
  double lo = 1e300, hi = -1e300;
  for (u64 q : qs) {
    MomentConfig cfg;
    cfg.q = q;
    cfg.k = k;
    const auto e = moment_bound_estimate(cfg);
    cfg.c_scale = 2.0;
    const auto e2 = moment_bound_estimate(cfg);
    const std::string key = "q=" + std::to_string(q);
    rep.record(key + ",finite", e.normalized, 0.0, std::isfinite(e.normalized) && e.normalized > 0);
    rep.record(key + ",dominated", std::abs(e.offdiag_partial) / e.diagonal, 1.0,
               std::abs(e.offdiag_partial) < e.diagonal);
    const double d = std::abs(e2.offdiag_partial - e.offdiag_partial);
    rep.record(key + ",C-vs-2C", d, e.offdiag_tail_bound, d <= e.offdiag_tail_bound);
    lo = std::min(lo, e.normalized);
    hi = std::max(hi, e.normalized);
    rep.stats[key + ",diagonal"] = e.diagonal;
    rep.stats[key + ",offdiag"] = e.offdiag_partial;
    rep.stats[key + ",tail_bound"] = e.offdiag_tail_bound;
    rep.stats[key + ",normalized"] = e.normalized;
  }
  rep.record("band", hi / lo, 4.0, hi / lo <= 4.0);
  {
    // the c-sum run far past C at the smallest q: D + OD is a harmonic sum of squares, so >= 0
    MomentConfig cfg;
    cfg.q = qs.front();
    cfg.k = k;
    cfg.c_cutoff_mode = MomentConfig::CCutoff::Fixed;
    cfg.c_fixed = 320;
    const auto e = moment_bound_estimate(cfg);
    const std::string key = "q=" + std::to_string(cfg.q) + ",c<=320";
    rep.record(key + ",positivity", e.diagonal + e.offdiag_partial + e.offdiag_tail_bound, 0.0,
               e.diagonal + e.offdiag_partial + e.offdiag_tail_bound >= 0.0);
    rep.stats[key + ",offdiag"] = e.offdiag_partial;
    rep.stats[key + ",tail_bound"] = e.offdiag_tail_bound;
  }
  rep.stats["band_ratio"] = hi / lo;
  return rep;
}

scan::ScanReport petersson_consistency_suite(u64 q, int k, u64 c_max) {
  scan::ScanReport rep;
  rep.name = "petersson-consistency";
  rep.range = "q=" + std::to_string(q) + ", k=" + std::to_string(k) + ", c<=" + std::to_string(c_max) + ", 10 tuples";
  const std::array<std::array<u64, 6>, 10> tuples = {{{1, 1, 1, 1, 1, 1},
                                                      {1, 1, 2, 1, 2, 3},
                                                      {2, 1, 3, 1, 3, 1},
                                                      {1, 2, 5, 3, 1, 2},
                                                      {1, 3, 4, 2, 1, 9},
                                                      {3, 1, 1, 1, 4, 6},
                                                      {1, 1, 12, 2, 3, 5},
                                                      {5, 2, 1, 1, 1, 10},
                                                      {2, 3, 8, 3, 2, 4},
                                                      {1, 4, 11, 1, 6, 13}}};
  for (const auto& t : tuples) {
    if (arith::gcd(t[0] * t[1] * t[3] * t[4], q) != 1) continue;
    const auto r = petersson_consistency(q, k, t[0], t[1], t[2], t[3], t[4], t[5], c_max);
    const double dev = std::abs(r.character_side - r.rearranged);
    std::ostringstream key;
    key << "(" << t[0] << "," << t[1] << "," << t[2] << ";" << t[3] << "," << t[4] << "," << t[5] << ")";
    rep.record(key.str(), dev, 1e-8, dev <= 1e-8);
  }
  return rep;
}

}  // namespace sixmoment::moment
