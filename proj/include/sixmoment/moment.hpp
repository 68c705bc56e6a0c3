#pragma once

#include <cstdint>
#include <vector>

#include "sixmoment/arith.hpp"
#include "sixmoment/numeric.hpp"
#include "sixmoment/scan.hpp"

namespace sixmoment::moment {

using arith::i64;
using arith::u64;

struct MomentConfig {
  u64 q = 11;
  int k = 3;
  double tuple_cutoff_exponent = 1.6;  // a^3 b^2 n <= q^{this}
  enum class CCutoff { Standard, Fixed } c_cutoff_mode = CCutoff::Standard;
  double c_fixed = 10.0;           // used when c_cutoff_mode == Fixed
  double c_scale = 1.0;            // multiplies C (C vs 2C self-consistency)
  double mellin_height = 40.0;
  int mellin_nodes = 2000;
  u64 node_limit = 2'000'000'000;  // budget on off-diagonal inner terms
  unsigned workers = 1;

  void validate() const;
  double epsilon() const { return tuple_cutoff_exponent - 1.5; }
};

// ---- the AFE weight ----

/// U(y) = (1/2 pi i) int_{(2)} y^{-s} gamma(s)^3 e^{3 s^2} ds / s by the trapezoid rule.
/// Lines: Re s = 2 for y >= 1; Re s = -1 plus the residue 1 for y < 1.
class UWeight {
 public:
  explicit UWeight(int k, double height = 40.0, int nodes = 2000);
  int k() const noexcept { return k_; }
  /// Real value; imag part of the raw quadrature is returned through imag when nonnull.
  double operator()(double y, double* imag = nullptr) const;

 private:
  struct Line {
    double sigma;
    std::vector<cplx> g;  // h/(2 pi) gamma^3 e^{3 s^2} / s at s = sigma + i t_j
  };
  int k_;
  double t0_, h_;
  Line right_, left_;
  static double eval(const Line& line, double t0, double h, double y, double* imag);
};

double u_weight(double y, int k, double height = 40.0, int nodes = 2000);

// ---- diagonal Euler product ----

/// Power-series coefficients in t = p^{-s} of D_p for p != q (is_q false) or the q-factor.
std::vector<i64> diagonal_local_factor(int order, bool is_q = false);
std::vector<i64> diagonal_local_factor(u64 p, int order, u64 q);
/// Coefficients of D_p(s) (1 - p^{-s})^9.
std::vector<i64> h_factor_check(u64 p, int order, u64 q = 0);
scan::ScanReport h_factor_suite(int n_primes = 25, int order = 6);

/// D_p at complex t = p^{-s} in closed form (all orders).
cplx diagonal_local_value(cplx t, bool is_q);

struct HValue {
  cplx value;
  double tail;  // estimated relative error from the prime cutoff
};
/// H(s) = D(s) / zeta(s)^9 for Re s > 1/2 (with zeta(2s), zeta(3s) factored out for convergence).
HValue h_function(cplx s, u64 q, u64 p_max = 10000);

struct R1Leading {
  double h1;
  double h1_tail;
  double value;  // H(1) ((3/2) log q)^9 / 9!
};
R1Leading r1_leading(u64 q, int k, u64 p_max = 100000);
/// Plain partial product prod_{p <= p_max} D_p(1) (1 - 1/p)^9, q-factor included.
double h1_partial_product(u64 q, u64 p_max);
/// Full residue at u = 0 of q^{3u/2} zeta^9(1+u) H(1+u) gamma^3(u) e^{3u^2} / u.
double r1_full(u64 q, int k, double radius = 0.25, int nodes = 128);

// ---- diagonal sum ----

struct DiagonalDirect {
  double value;
  double tail_estimate;  // measured mass in (X, 8X]
  double cutoff;         // X
  u64 tuples;
};
/// Direct tuple summation of the diagonal; unit_weight replaces U by 1 and X by cutoff_override.
DiagonalDirect diagonal_direct(const MomentConfig& cfg, bool unit_weight = false, double cutoff_override = 0.0);

/// Dirichlet coefficients of D up to X: by the tuple enumeration and by multiplicativity.
std::vector<i64> diagonal_coefficients_brute(u64 X, u64 q);
std::vector<i64> diagonal_coefficients_euler(u64 X, u64 q);

/// Double Mellin integral for the (untruncated) diagonal on Re s1 = Re s2 = sigma.
double diagonal_contour(u64 q, int k, double sigma = 0.3, double height = 6.0, double step = 0.02);

struct DiagonalBreakdown {
  u64 q;
  int k;
  double direct_value;
  double direct_tail;
  double contour_value;
  double r1_leading;
  double r1_full;
  double h1;
  double ratio_direct_r1;
  double ratio_contour_r1;
};
DiagonalBreakdown diagonal_breakdown(const MomentConfig& cfg);
scan::ScanReport diagonal_suite(const std::vector<u64>& qs, int k = 3);

// ---- off-diagonal and the Cauchy-bounded quantity ----

struct MomentEstimate {
  u64 q;
  int k;
  double diagonal;
  double offdiag_partial;
  double offdiag_tail_bound;
  double normalized;  // (diagonal + offdiag_partial) / (log q)^9
  u64 blocks;
  u64 c_terms;
};
MomentEstimate moment_bound_estimate(const MomentConfig& cfg);
scan::ScanReport moment_proxy_suite(const std::vector<u64>& qs, int k = 3);

/// Character-side vs rearranged Kloosterman form of the off-diagonal on one tuple.
struct PeterssonConsistency {
  cplx character_side;
  cplx rearranged;
};
PeterssonConsistency petersson_consistency(u64 q, int k, u64 a1, u64 b1, u64 n, u64 a2, u64 b2, u64 m, u64 c_max);
scan::ScanReport petersson_consistency_suite(u64 q = 7, int k = 3, u64 c_max = 20);

}  // namespace sixmoment::moment
