#pragma once

#include <vector>

#include "sixmoment/arith.hpp"
#include "sixmoment/numeric.hpp"
#include "sixmoment/scan.hpp"
#include "sixmoment/special.hpp"

namespace sixmoment::estermann {

using arith::i64;
using arith::u64;

/// Coefficients of (s-1)^{-3}, (s-1)^{-2}, (s-1)^{-1} of E_3(s, lambda/eta).
struct LaurentTriple {
  u64 eta;
  double d3, d2, d1;
};

/// Per-denominator class sums over reduced fractions a/d, (a,d) = 1:
///   R(d) = sum gamma_0(a/d),   T(d) = sum c_1(a/d)
/// where c_1 is the plain Taylor coefficient of zeta(s,r) - 1/(s-1) (= -gamma_1(r)).
double class_sum_gamma0(u64 d);
double class_sum_taylor1(u64 d, const special::AccuracySpec& acc = {});

/// Memoized class sums for all d <= limit, filled in parallel.
class ClassSums {
 public:
  ClassSums(u64 limit, bool with_taylor1, int workers = 1);
  u64 limit() const noexcept { return limit_; }
  bool has_taylor1() const noexcept { return !t_.empty(); }
  double R(u64 d) const { return r_.at(d); }
  double T(u64 d) const { return t_.at(d); }

 private:
  u64 limit_;
  std::vector<double> r_, t_;
};

/// The displayed double sums, evaluated through gcd classes.
LaurentTriple d_coeffs_direct(u64 eta);
LaurentTriple d_coeffs_direct(const arith::Factorization& eta, const ClassSums& sums, bool with_d1);

/// Literal O(eta^2) evaluation of the double sums (test oracle, small eta only).
LaurentTriple d_coeffs_naive(u64 eta);

/// prod over p^r || eta of ((r+1)/p^r)(1 - r/(p(r+1))).
double d3_closed_form(u64 eta);
double d3_closed_form(const arith::Factorization& eta);

struct TruncatedSum {
  cplx value;
  double tail_estimate;
};
/// sum_{n <= n_max} tau_3(n) e(n lambda/eta) n^{-s}.
TruncatedSum e3_truncated(cplx s, i64 lambda, u64 eta, u64 n_max);

/// E_3 by residue-class dissection into Hurwitz zeta values.
cplx e3_analytic(cplx s, i64 lambda, u64 eta);

/// Laurent triple from trapezoidal Cauchy integrals of e3_analytic on |s-1| = radius.
LaurentTriple laurent_via_cauchy(i64 lambda, u64 eta, double radius = 0.25, int nodes = 64);

struct WindowSup {
  u64 lo, hi;  // [lo, hi]
  double sup;
  u64 argmax;
};

struct DBoundReport {
  int i;
  u64 eta_max;
  double sup_ratio;
  u64 argmax_eta;
  std::vector<WindowSup> window_sups;
};

/// Scans |D_{-i}(eta)| eta / (tau_2(eta) (log eta)^{3-i}) for 2 <= eta <= eta_max.
DBoundReport dbound_scan(int i, u64 eta_max, int workers = 1);

/// Property form: window sups past 10^3 grow by less than max_growth decade over decade.
scan::ScanReport dbound_property(const DBoundReport& rep, double max_growth = 0.05, u64 start = 1000);

scan::ScanReport laurent_oracle_suite(u64 eta_max, double tol = 1e-6);
scan::ScanReport d3_closed_form_suite(u64 eta_max, double tol = 1e-10);

}  // namespace sixmoment::estermann
