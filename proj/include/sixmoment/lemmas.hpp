#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sixmoment/arith.hpp"
#include "sixmoment/numeric.hpp"
#include "sixmoment/scan.hpp"

namespace sixmoment::lemmas {

using arith::i64;
using arith::u64;

// ---- coprime residue count ----

struct SumstarCount {
  u64 lhs;
  u64 rhs_num, rhs_den;  // exact fraction c prod (1 - 1/p)
  bool equal() const { return rhs_den != 0 && rhs_num == lhs * rhs_den; }
};
/// #{x mod c l : (x, c l) = 1, x == a (mod l)} against c prod_{p | c, p !| l} (1 - 1/p).
SumstarCount sumstar_count(u64 c, u64 ell, i64 a);
scan::ScanReport sumstar_suite(u64 c_max, u64 ell_max);

// ---- the K operator ----

/// K g = i^{-k} g + i^{k} conj(g).
cplx kappa_apply(cplx g, int k);

// ---- smooth cutoffs ----

/// w = 1 on [0,1], 0 on [2, inf), smooth monotone step on (1,2).
class SmoothCutoff {
 public:
  enum class Shape { SmoothStep, CosineRamp };
  explicit SmoothCutoff(double L, Shape shape = Shape::SmoothStep);
  double L() const noexcept { return L_; }
  Shape shape() const noexcept { return shape_; }
  /// w(x) on the unscaled variable.
  double w(double x) const;
  /// w(ell / L).
  double operator()(double ell) const { return w(ell / L_); }

 private:
  double L_;
  Shape shape_;
};

struct IdentitySides {
  cplx lhs, rhs;
  double residual;        // |lhs - rhs|
  double error_estimate;  // quadrature error estimate on the ramp
};

/// sum_l w(l/L) (log l)^j l^{-1-u} - int_0^inf w(l/L) (log l)^j l^{-1-u} dl  vs  (-1)^j zeta^{(j)}(1+u).
/// The integral over [0, L] is the analytic continuation of its closed form.
IdentitySides smoothed_zeta_identity(cplx u, int j, double L,
                                     SmoothCutoff::Shape shape = SmoothCutoff::Shape::SmoothStep);
/// Residual trend along L in {1e2, 1e3, 1e4}: nonincreasing within 10% or below a roundoff floor.
scan::ScanReport zeta_identity_suite();

struct BesselSplit {
  cplx lhs, rhs;
  double residual;       // reported error budget
  double delta_tail;     // bound on the dropped delta > delta_max terms
  double ell_tail;       // bound on the dropped ell > ell_max terms
  double quad_error;     // ramp/integral quadrature estimate
  double max_partial_imag;  // largest |Im| over partial sums of the lhs
};
BesselSplit bessel_split_check(double y1, double y2, double alpha, double beta, int k, double L, u64 delta_max,
                               u64 ell_max);
/// Residual budget at L = 200, shrinkage from L = 100, reality of partial sums, and the trivial case.
scan::ScanReport bessel_split_suite();

// ---- C_1, C_2 and the final-piece proposition ----

/// Direct divisor-sum evaluation of C_variant(n, z; j1, j2).
cplx cfunc(int variant, u64 n, cplx z, int j1, int j2);
/// Same quantity from the local factors C_p(z, s) via Leibniz expansion.
cplx cfunc_product(int variant, u64 n, cplx z, int j1, int j2);

/// Local factor C_p(z, s) = p^{-rz} + (1 - p^{-s})(v(p) + sum_{c=1}^{r-1} p^{-cz}).
cplx local_factor(u64 p, unsigned r, cplx z, cplx s, double vp);
/// Closed-form partial d^a/dz^a d^b/ds^b of the local factor.
cplx local_factor_partial(u64 p, unsigned r, cplx z, cplx s, double vp, int a, int b);

struct DerivativeCheck {
  cplx closed, fd;
};
/// Closed-form local partial at s = z vs Richardson-extrapolated central differences.
DerivativeCheck cfunc_derivative_crosscheck(u64 p, unsigned r, cplx z, int j1, int j2, double vp = 1.0);

/// The z grid {0, 0.1, 1/log n} + i{0, +-1, +-10}.
std::vector<cplx> finalpiece_z_grid(u64 n);
scan::ScanReport finalpiece_scan(u64 n_max, int j_max = 2);
scan::ScanReport cfunc_consistency_suite(u64 n_max);
scan::ScanReport derivative_crosscheck_suite();

// ---- y-exponent ----

struct YExponentCase {
  int a1, b1, a2, b2;
  double eps;
  int u1, u2;
  double y;
};
YExponentCase y_exponent(int a1, int b1, int a2, int b2, double eps = 0.25);
scan::ScanReport y_exhaustive_check(double eps = 0.25, u64 seed = 1, int random_tuples = 10000);

}  // namespace sixmoment::lemmas
