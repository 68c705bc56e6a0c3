#include "sixmoment/estermann.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <cmath>
#include <sstream>
#include <thread>

#include "sixmoment/error.hpp"

namespace sixmoment::estermann {

namespace {

// Marks a in [1, d] coprime to d.
std::vector<char> coprime_mask(u64 d) {
  std::vector<char> ok(d + 1, 1);
  ok[0] = 0;
  const auto fd = arith::factorize(d);
  for (const auto& pp : fd.factors())
    for (u64 k = pp.prime; k <= d; k += pp.prime) ok[k] = 0;
  if (d == 1) ok[1] = 1;
  return ok;
}

template <class F>
double reduced_class_sum(u64 d, F&& f) {
  require(d >= 1, "class sum: d must be positive");
  const auto ok = coprime_mask(d);
  CompensatedSum<double> s;
  const double dd = static_cast<double>(d);
  for (u64 a = 1; a <= d; ++a)
    if (ok[a]) s += f(static_cast<double>(a) / dd);
  return s.value();
}

template <class RFn, class TFn>
LaurentTriple direct_from_classes(const arith::Factorization& fe, RFn&& R, TFn&& T, bool with_d1) {
  const u64 eta = fe.value();
  const auto divs = arith::divisors(fe);
  CompensatedSum<double> n_pairs, sa, saa, sb;
  for (u64 d : divs) {
    const u64 g = eta / d;  // gcd(alpha_1, eta) for this class; also the number of admissible alpha_2
    const double rd = R(d);
    n_pairs += static_cast<double>(g) * static_cast<double>(arith::euler_phi(d));
    sa += static_cast<double>(g) * rd;
    if (with_d1) {
      // sum_{j=1}^{g} gamma_0(j/g) regrouped by reduced denominator e | g
      CompensatedSum<double> sg;
      for (u64 e : divs)
        if (g % e == 0) sg += R(e);
      saa += rd * sg.value();
      sb += static_cast<double>(g) * T(d);
    }
  }
  const double e2 = static_cast<double>(eta) * static_cast<double>(eta);
  const double l = std::log(static_cast<double>(eta));
  const double n = n_pairs.value();
  LaurentTriple t{eta, n / e2, (3.0 * sa.value() - 3.0 * l * n) / e2, 0.0};
  if (with_d1)
    t.d1 = (4.5 * l * l * n - 9.0 * l * sa.value() + 3.0 * saa.value() + 3.0 * sb.value()) / e2;
  else
    t.d1 = std::nan("");
  return t;
}

std::string eta_key(u64 eta) { return "eta=" + std::to_string(eta); }

}  // namespace

double class_sum_gamma0(u64 d) {
  return reduced_class_sum(d, [](double r) { return -special::digamma(r); });
}

double class_sum_taylor1(u64 d, const special::AccuracySpec& acc) {
  return reduced_class_sum(d, [&](double r) { return special::hurwitz_taylor1(r, acc); });
}

ClassSums::ClassSums(u64 limit, bool with_taylor1, int workers) : limit_(limit) {
  require(limit >= 1, "ClassSums: limit must be positive");
  require(workers >= 1, "ClassSums: need at least one worker");
  r_.assign(limit + 1, 0.0);
  if (with_taylor1) t_.assign(limit + 1, 0.0);
  auto run = [&](int w) {
    for (u64 d = 1 + static_cast<u64>(w); d <= limit; d += static_cast<u64>(workers)) {
      r_[d] = class_sum_gamma0(d);
      if (with_taylor1) t_[d] = class_sum_taylor1(d);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
}

LaurentTriple d_coeffs_direct(u64 eta) {
  require(eta >= 1, "d_coeffs_direct: eta must be positive");
  const arith::Factorization fe(eta);
  return direct_from_classes(
      fe, [](u64 d) { return class_sum_gamma0(d); }, [](u64 d) { return class_sum_taylor1(d); }, true);
}

LaurentTriple d_coeffs_direct(const arith::Factorization& eta, const ClassSums& sums, bool with_d1) {
  require(eta.value() <= sums.limit(), "d_coeffs_direct: class sums do not cover eta");
  require(!with_d1 || sums.has_taylor1(), "d_coeffs_direct: class sums lack Taylor coefficients");
  return direct_from_classes(
      eta, [&](u64 d) { return sums.R(d); }, [&](u64 d) { return sums.T(d); }, with_d1);
}

LaurentTriple d_coeffs_naive(u64 eta) {
  require(eta >= 1 && eta <= 2000, "d_coeffs_naive: eta must lie in [1, 2000]");
  std::vector<double> g0(eta + 1), c1(eta + 1);
  for (u64 a = 1; a <= eta; ++a) {
    const double r = static_cast<double>(a) / static_cast<double>(eta);
    g0[a] = special::stieltjes_gamma(0, r);
    c1[a] = special::hurwitz_taylor1(r);
  }
  const double l = std::log(static_cast<double>(eta));
  CompensatedSum<double> s3, s2, s1;
  for (u64 a1 = 1; a1 <= eta; ++a1)
    for (u64 a2 = 1; a2 <= eta; ++a2) {
      if ((a1 * a2) % eta != 0) continue;
      s3 += 1.0;
      s2 += 3.0 * g0[a1] - 3.0 * l;
      s1 += 4.5 * l * l - 9.0 * g0[a1] * l + 3.0 * g0[a1] * g0[a2] + 3.0 * c1[a1];
    }
  const double e2 = static_cast<double>(eta) * static_cast<double>(eta);
  return {eta, s3.value() / e2, s2.value() / e2, s1.value() / e2};
}

double d3_closed_form(const arith::Factorization& fe) {
  double v = 1.0;
  for (const auto& pp : fe.factors()) {
    const double p = static_cast<double>(pp.prime), r = pp.exponent;
    v *= (r + 1.0) / std::pow(p, r) * (1.0 - r / (p * (r + 1.0)));
  }
  return v;
}

double d3_closed_form(u64 eta) {
  require(eta >= 1, "d3_closed_form: eta must be positive");
  return d3_closed_form(arith::factorize(eta));
}

TruncatedSum e3_truncated(cplx s, i64 lambda, u64 eta, u64 n_max) {
  require(eta >= 1 && n_max >= 1, "e3_truncated: eta and n_max must be positive");
  require(arith::gcd(arith::reduce(lambda, eta), eta) == 1, "e3_truncated: need gcd(lambda, eta) = 1");
  require(s.real() >= 1.2, "e3_truncated: need Re s >= 1.2");
  require(n_max <= 50'000'000, "e3_truncated: n_max too large");
  const arith::Sieve sv(static_cast<std::uint32_t>(n_max));
  const u64 lam = arith::reduce(lambda, eta);
  CompensatedSum<cplx> acc;
  for (u64 n = 1; n <= n_max; ++n) {
    const cplx ph = root_of_unity(static_cast<long long>(arith::mul_mod(n % eta, lam, eta)), static_cast<long long>(eta));
    acc += static_cast<double>(sv.tau3(static_cast<std::uint32_t>(n))) * ph * std::exp(-s * std::log(static_cast<double>(n)));
  }
  // sum_{n > N} tau_3(n) n^{-sigma} ~ int_N^inf (log x)^2/2 x^{-sigma} dx, padded by 2x
  const double sig = s.real(), L = std::log(static_cast<double>(n_max)), a = sig - 1.0;
  const double tail = 2.0 * std::pow(static_cast<double>(n_max), -a) / a * (0.5 * L * L + L / a + 1.0 / (a * a)) +
                      std::pow(static_cast<double>(n_max), -a) / a * 3.0 * (L + 1.0 / a);
  return {acc.value(), tail};
}

cplx e3_analytic(cplx s, i64 lambda, u64 eta) {
  require(eta >= 1, "e3_analytic: eta must be positive");
  require(arith::gcd(arith::reduce(lambda, eta), eta) == 1, "e3_analytic: need gcd(lambda, eta) = 1");
  if (std::abs(s - 1.0) < 1e-12) fail(ErrorKind::PoleAtOne, "e3_analytic: pole at s = 1");
  const u64 lam = arith::reduce(lambda, eta);
  const double de = static_cast<double>(eta);
  std::vector<cplx> h(eta);  // h[a mod eta] = zeta(s, alpha/eta), alpha in [1, eta]
  std::vector<cplx> roots(eta);
  for (u64 a = 1; a <= eta; ++a) h[a % eta] = special::hurwitz_zeta(s, static_cast<double>(a) / de);
  for (u64 r = 0; r < eta; ++r) roots[r] = root_of_unity(static_cast<long long>(r), static_cast<long long>(eta));
  // phi[p] = sum_{alpha_3} e(lambda p alpha_3/eta) h[alpha_3]
  std::vector<cplx> phi(eta);
  for (u64 p = 0; p < eta; ++p) {
    CompensatedSum<cplx> acc;
    const u64 lp = arith::mul_mod(lam, p, eta);
    for (u64 a3 = 0; a3 < eta; ++a3) acc += roots[arith::mul_mod(lp, a3, eta)] * h[a3];
    phi[p] = acc.value();
  }
  CompensatedSum<cplx> total;
  for (u64 a1 = 0; a1 < eta; ++a1) {
    CompensatedSum<cplx> inner;
    for (u64 a2 = 0; a2 < eta; ++a2) inner += h[a2] * phi[arith::mul_mod(a1, a2, eta)];
    total += h[a1] * inner.value();
  }
  return std::exp(-3.0 * s * std::log(de)) * total.value();
}

LaurentTriple laurent_via_cauchy(i64 lambda, u64 eta, double radius, int nodes) {
  require(radius > 0.0 && radius < 0.5, "laurent_via_cauchy: radius must lie in (0, 0.5)");
  require(nodes >= 8 && nodes % 2 == 0, "laurent_via_cauchy: nodes must be even and >= 8");
  const int fine = 2 * nodes;
  std::vector<cplx> w(fine), val(fine);
  for (int j = 0; j < fine; ++j) {
    w[j] = std::polar(radius, kTwoPi * j / fine);
    val[j] = e3_analytic(1.0 + w[j], lambda, eta);
  }
  // D_{-i} = (1/2 pi i) \oint E (s-1)^{i-1} ds = mean of E(s_j) w_j^i
  auto extract = [&](int stride) {
    std::array<double, 3> d{};
    for (int i = 1; i <= 3; ++i) {
      CompensatedSum<cplx> acc;
      int count = 0;
      for (int j = 0; j < fine; j += stride, ++count) acc += val[j] * std::pow(w[j], i);
      d[i - 1] = (acc.value() / static_cast<double>(count)).real();
    }
    return d;
  };
  const auto coarse = extract(2), fine_d = extract(1);
  for (int i = 0; i < 3; ++i)
    if (std::abs(coarse[i] - fine_d[i]) > 1e-6 * std::max(1.0, std::abs(fine_d[i])))
      fail(ErrorKind::ConvergenceFailure, "laurent_via_cauchy: node doubling changed the coefficients");
  return {eta, coarse[2], coarse[1], coarse[0]};
}

DBoundReport dbound_scan(int i, u64 eta_max, int workers) {
  require(i >= 1 && i <= 3, "dbound_scan: i must be in 1..3");
  require(eta_max >= 10, "dbound_scan: eta_max must be at least 10");
  const u64 cap = i == 1 ? 5000 : i == 2 ? 100000 : 1000000;
  if (eta_max > cap) fail(ErrorKind::BudgetExceeded, "dbound_scan: eta_max exceeds the budget for this i");
  require(workers >= 1, "dbound_scan: need at least one worker");

  const arith::Sieve sv(static_cast<std::uint32_t>(eta_max));
  std::unique_ptr<ClassSums> sums;
  if (i < 3) sums = std::make_unique<ClassSums>(eta_max, i == 1, workers);

  std::vector<double> ratio(eta_max + 1, 0.0);
  auto run = [&](int w) {
    for (u64 eta = 2 + static_cast<u64>(w); eta <= eta_max; eta += static_cast<u64>(workers)) {
      const auto fe = sv.factorize(static_cast<std::uint32_t>(eta));
      double d;
      if (i == 3)
        d = d3_closed_form(fe);
      else {
        const auto t = d_coeffs_direct(fe, *sums, i == 1);
        d = i == 2 ? t.d2 : t.d1;
      }
      const double l = std::log(static_cast<double>(eta));
      ratio[eta] = std::abs(d) * static_cast<double>(eta) /
                   (static_cast<double>(arith::tau_k(fe, 2)) * std::pow(l, 3 - i));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  DBoundReport rep{i, eta_max, 0.0, 2, {}};
  u64 lo = 2, hi = 9;
  while (lo <= eta_max) {
    const u64 top = std::min(hi, eta_max);
    WindowSup ws{lo, top, 0.0, lo};
    for (u64 eta = lo; eta <= top; ++eta)
      if (ratio[eta] > ws.sup) ws.sup = ratio[eta], ws.argmax = eta;
    rep.window_sups.push_back(ws);
    if (ws.sup > rep.sup_ratio) rep.sup_ratio = ws.sup, rep.argmax_eta = ws.argmax;
    lo = hi + 1;
    hi = lo * 10 - 1;
  }
  return rep;
}

scan::ScanReport dbound_property(const DBoundReport& rep, double max_growth, u64 start) {
  scan::ScanReport out;
  out.name = "dbound-i" + std::to_string(rep.i);
  out.range = "2 <= eta <= " + std::to_string(rep.eta_max);
  out.sup = rep.sup_ratio;
  out.argmax = eta_key(rep.argmax_eta);
  for (const auto& w : rep.window_sups) out.stats["window[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]"] = w.sup;
  for (std::size_t k = 1; k < rep.window_sups.size(); ++k) {
    const auto& a = rep.window_sups[k - 1];
    const auto& b = rep.window_sups[k];
    if (b.lo < start) continue;
    const double growth = b.sup / a.sup - 1.0;
    ++out.checked;
    std::ostringstream key;
    key << "windows[" << a.lo << "," << a.hi << "]->[" << b.lo << "," << b.hi << "]";
    if (growth >= max_growth) out.violate(key.str(), growth, max_growth);
  }
  return out;
}

scan::ScanReport laurent_oracle_suite(u64 eta_max, double tol) {
  scan::ScanReport rep;
  rep.name = "laurent-oracle";
  rep.range = "eta <= " + std::to_string(eta_max) + ", all lambda coprime to eta";
  const ClassSums sums(eta_max, true);
  for (u64 eta = 1; eta <= eta_max; ++eta) {
    const auto direct = d_coeffs_direct(arith::Factorization(eta), sums, true);
    std::vector<LaurentTriple> trips;
    for (u64 lam = eta == 1 ? 0 : 1; lam < std::max<u64>(eta, 1); ++lam) {
      if (arith::gcd(lam, eta) != 1) continue;
      trips.push_back(laurent_via_cauchy(static_cast<i64>(lam), eta));
      const auto& t = trips.back();
      const double err = std::max({std::abs(t.d3 - direct.d3), std::abs(t.d2 - direct.d2), std::abs(t.d1 - direct.d1)});
      rep.record(eta_key(eta) + ",lambda=" + std::to_string(lam), err, tol, err <= tol);
    }
    double spread = 0.0;
    for (std::size_t a = 0; a < trips.size(); ++a)
      for (std::size_t b = a + 1; b < trips.size(); ++b)
        spread = std::max({spread, std::abs(trips[a].d3 - trips[b].d3), std::abs(trips[a].d2 - trips[b].d2),
                           std::abs(trips[a].d1 - trips[b].d1)});
    rep.stats["max_lambda_spread"] = std::max(rep.stats["max_lambda_spread"], spread);
    if (spread >= tol) rep.violate(eta_key(eta) + ",lambda-spread", spread, tol);
  }
  return rep;
}

scan::ScanReport d3_closed_form_suite(u64 eta_max, double tol) {
  scan::ScanReport rep;
  rep.name = "d3-closed-form";
  rep.range = "eta <= " + std::to_string(eta_max);
  const arith::Sieve sv(static_cast<std::uint32_t>(eta_max));
  for (u64 eta = 1; eta <= eta_max; ++eta) {
    // direct double sum: #{(a1, a2) : eta | a1 a2} = sum_{a1} gcd(a1, eta)
    u64 count = 0;
    for (u64 a1 = 1; a1 <= eta; ++a1) count += arith::gcd(a1, eta);
    const double direct = static_cast<double>(count) / (static_cast<double>(eta) * static_cast<double>(eta));
    const double err = std::abs(direct - d3_closed_form(sv.factorize(static_cast<std::uint32_t>(eta))));
    rep.record(eta_key(eta), err, tol, err <= tol);
  }
  for (auto [eta, want] : {std::pair<u64, double>{2, 0.75}, {4, 0.5}, {6, 5.0 / 12.0}}) {
    const double err = std::abs(d3_closed_form(eta) - want);
    rep.record("spot," + eta_key(eta), err, tol, err <= tol);
  }
  return rep;
}

}  // namespace sixmoment::estermann
