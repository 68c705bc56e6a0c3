#pragma once

#include <span>
#include <vector>

#include "sixmoment/numeric.hpp"
#include "sixmoment/scan.hpp"

namespace sixmoment::special {

struct AccuracySpec {
  double rel_tol = 1e-9;
  int max_terms = 512;          // cap on contour nodes
  double contour_radius = 0.25;

  void validate() const;
};

// ---- Gamma family ----

/// Principal-branch log Gamma.
cplx log_gamma(cplx s);
double log_gamma(double x);
cplx gamma(cplx s);

cplx digamma(cplx s);
double digamma(double x);

/// (2 pi)^{-s} Gamma(k/2 + s) / Gamma(k/2).
cplx gamma_factor(cplx s, int k);

// ---- zeta family ----

/// zeta(s, r) for r in (0, 1], by Euler-Maclaurin.
cplx hurwitz_zeta(cplx s, double r);
cplx riemann_zeta(cplx s);

/// j-th derivative of zeta at s via a Cauchy integral (j = 0 evaluates directly).
cplx riemann_zeta_deriv(int j, cplx s);

/// Plain Taylor coefficient c_1 of zeta(s, r) - 1/(s-1) at s = 1.
/// Note that c_1 = -gamma_1(r) in the usual sign convention.
double hurwitz_taylor1(double r, const AccuracySpec& acc = {});

/// Generalized Stieltjes constant gamma_j(r), j in {0, 1}, standard sign convention
/// zeta(s, r) = 1/(s-1) + sum_n (-1)^n gamma_n(r) (s-1)^n / n!.
double stieltjes_gamma(int j, double r, const AccuracySpec& acc = {});

/// Bounded-constant check of |gamma_j(x)| x / max(1, |log x|^j).
scan::ScanReport berndt_check(int j, std::span<const double> x_grid);

// ---- Bessel ----

/// J_nu(x) for integer nu >= 0, x >= 0.
double bessel_j(int nu, double x);

/// Ascending series for J_nu(x); accurate only for moderate x.
double bessel_j_series(int nu, double x);

/// The series form of J_{k-1}(2 pi x): sum (-1)^l (pi x)^{2l+k-1} / (l! (l+k-1)!).
double bessel_series_2pi(int k, double x);

/// J_nu(x) from (1/2pi) int_0^{2pi} cos(nu t - x sin t) dt by the periodic trapezoid rule.
double bessel_j_integral(int nu, double x);

/// Elementary bound min(1, (x/2)^nu / nu!) on |J_nu(x)|.
double bessel_j_bound(int nu, double x);

// ---- Hankel moments ----

/// int_0^inf x^mu (log x)^j J_nu(a x) dx by closed form; j in {0, 1, 2}.
cplx hankel_moment(cplx mu, int nu, double a, int j);

struct HankelQuadrature {
  cplx value;
  double acceleration_delta;  // change between the last two accelerated estimates
  int zeros_used;
};

/// Oscillatory quadrature between consecutive zeros of J_nu, Euler-accelerated.
HankelQuadrature hankel_moment_quadrature(cplx mu, int nu, double a, int j, int zeros = 200);

/// Closed form vs quadrature on a fixed set of admissible (mu, nu, a, j).
scan::ScanReport hankel_suite(double tol = 1e-5);

/// First n positive zeros of J_nu.
std::vector<double> bessel_zeros(int nu, int n);

}  // namespace sixmoment::special
