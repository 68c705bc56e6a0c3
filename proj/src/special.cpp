#include "sixmoment/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "sixmoment/error.hpp"
#include "sixmoment/quadrature.hpp"

namespace sixmoment::special {

void AccuracySpec::validate() const {
  require(rel_tol > 0.0 && rel_tol < 1.0, "AccuracySpec: rel_tol must lie in (0,1)");
  require(contour_radius > 0.0 && contour_radius < 0.5, "AccuracySpec: contour_radius must lie in (0,0.5)");
  require(max_terms >= 16, "AccuracySpec: max_terms must be at least 16");
}

namespace {

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// log sin(pi z). Reduces z by the nearest integer first so that sin(pi f) keeps full
// relative accuracy near the zeros; large |Im| handled without overflow.
cplx log_sin_pi(cplx z) {
  const double n = std::round(z.real());
  const cplx f = z - n;
  cplx sign_log = (static_cast<long long>(n) % 2 != 0) ? cplx(0.0, kPi) : cplx(0.0, 0.0);
  if (std::abs(f.imag()) < 2.0) return std::log(std::sin(kPi * f)) + sign_log;
  const bool upper = f.imag() > 0.0;
  const cplx g = upper ? f : std::conj(f);
  // sin(pi g) = e^{-i pi g} (e^{2 i pi g} - 1) / (2i), |e^{2 i pi g}| < 1
  const cplx i(0.0, 1.0);
  const cplx w = std::exp(2.0 * kPi * i * g);
  cplx r = -i * kPi * g + std::log((w - 1.0) / (2.0 * i));
  if (!upper) r = std::conj(r);
  return r + sign_log;
}

cplx cot_pi(cplx z) {
  const cplx f = z - std::round(z.real());
  if (std::abs(f.imag()) < 5.0) return std::cos(kPi * f) / std::sin(kPi * f);
  const bool upper = f.imag() > 0.0;
  const cplx g = upper ? f : std::conj(f);
  const cplx i(0.0, 1.0);
  const cplx w = std::exp(2.0 * kPi * i * g);
  cplx r = i * (w + 1.0) / (w - 1.0);
  return upper ? r : std::conj(r);
}

constexpr std::array<double, 8> kStirling = {1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,
                                             -1.0 / 1680.0,     1.0 / 1188.0,      -691.0 / 360360.0,
                                             1.0 / 156.0,       -3617.0 / 122400.0};

// B_{2k}/(2k) for the digamma asymptotic series.
constexpr std::array<double, 7> kDigammaAsym = {1.0 / 12.0,  -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
                                                1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};

// B_{2j}/(2j)! for Euler-Maclaurin, j = 1..13.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
    657931.0 / 186134520519971831808000000.0};

}  // namespace

cplx log_gamma(cplx s) {
  if (is_nonpositive_integer(s)) fail(ErrorKind::PoleAtNonpositiveInteger, "log_gamma: pole at nonpositive integer");
  if (!is_finite(s)) fail(ErrorKind::DomainViolation, "log_gamma: non-finite argument");
  // Far left: reflection (branch differs from the continuous one by 2 pi i k).
  if (s.real() < -60.0) return std::log(kPi) - log_sin_pi(s) - log_gamma(1.0 - s);
  // Upward shift with principal logs of each factor keeps the continuous branch.
  cplx z = s;
  cplx shift = 0.0;
  while (std::abs(z) < 15.0 || z.real() < 0.5) {
    shift += std::log(z);
    z += 1.0;
  }
  const cplx iz = 1.0 / z, iz2 = iz * iz;
  cplx series = 0.0, p = iz;
  for (double c : kStirling) {
    series += c * p;
    p *= iz2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift;
}

double log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) fail(ErrorKind::PoleAtNonpositiveInteger, "log_gamma: pole at nonpositive integer");
  return std::lgamma(x);
}

cplx gamma(cplx s) { return std::exp(log_gamma(s)); }

cplx digamma(cplx s) {
  if (is_nonpositive_integer(s)) fail(ErrorKind::PoleAtNonpositiveInteger, "digamma: pole at nonpositive integer");
  if (s.real() < -60.0) return digamma(1.0 - s) - kPi * cot_pi(s);
  cplx z = s, shift = 0.0;
  while (std::abs(z) < 15.0 || z.real() < 0.5) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const cplx iz = 1.0 / z, iz2 = iz * iz;
  cplx series = 0.0, p = iz2;
  for (double c : kDigammaAsym) {
    series += c * p;
    p *= iz2;
  }
  return std::log(z) - 0.5 * iz - series - shift;
}

double digamma(double x) {
  if (x <= 0.0) {
    if (x == std::floor(x)) fail(ErrorKind::PoleAtNonpositiveInteger, "digamma: pole at nonpositive integer");
    const double f = x - std::round(x);
    return digamma(1.0 - x) - kPi / std::tan(kPi * f);
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double ix2 = 1.0 / (x * x);
  double series = 0.0;
  for (auto it = kDigammaAsym.rbegin(); it != kDigammaAsym.rend(); ++it) series = (series + *it) * ix2;
  return std::log(x) - 0.5 / x - series - shift;
}

cplx gamma_factor(cplx s, int k) {
  require(k >= 3 && k % 2 == 1, "gamma_factor: k must be an odd integer >= 3");
  const double h = 0.5 * k;
  return std::exp(-s * std::log(kTwoPi) + log_gamma(h + s) - log_gamma(cplx(h, 0.0)));
}

// ---- Hurwitz zeta ----

namespace {

// Evaluates zeta(s_i, r) for a batch of points sharing the same r; the logarithms
// log(n + r) are computed once.
void hurwitz_batch(const cplx* s, int count, double r, cplx* out) {
  require(r > 0.0 && std::isfinite(r), "hurwitz_zeta: r must be positive");
  double smax = 0.0, re_min = 1e300;
  for (int i = 0; i < count; ++i) {
    re_min = std::min(re_min, s[i].real());
    if (s[i] == cplx(1.0, 0.0)) fail(ErrorKind::PoleAtOne, "hurwitz_zeta: pole at s = 1");
    if (!is_finite(s[i])) fail(ErrorKind::DomainViolation, "hurwitz_zeta: non-finite argument");
    smax = std::max(smax, std::abs(s[i]));
  }
  const int n_shift = 9 + static_cast<int>(std::ceil(smax));
  // Large |s| or Re s < 0 means large phases and cancellation in the partial sum;
  // those terms are formed in extended precision.
  const bool extended = smax > 8.0 || re_min < 0.0;
  std::vector<long double> logs(n_shift);
  for (int n = 0; n < n_shift; ++n) logs[n] = std::log(static_cast<long double>(n) + r);
  const double x = n_shift + r, lx = std::log(x), ix2 = 1.0 / (x * x);

  for (int i = 0; i < count; ++i) {
    const cplx si = s[i];
    CompensatedSum<cplx> acc;
    if (extended) {
      const long double sr = si.real(), sim = si.imag();
      long double ar = 0.0L, ai = 0.0L;
      for (int n = 0; n < n_shift; ++n) {
        const long double mag = std::exp(-sr * logs[n]), ph = -sim * logs[n];
        ar += mag * std::cos(ph);
        ai += mag * std::sin(ph);
      }
      acc += cplx(static_cast<double>(ar), static_cast<double>(ai));
    } else {
      for (int n = 0; n < n_shift; ++n) acc += std::exp(-si * static_cast<double>(logs[n]));
    }
    cplx xs;  // x^{-s}
    if (extended) {
      const long double lxl = std::log(static_cast<long double>(n_shift) + r);
      const long double mag = std::exp(-static_cast<long double>(si.real()) * lxl);
      const long double ph = -static_cast<long double>(si.imag()) * lxl;
      xs = cplx(static_cast<double>(mag * std::cos(ph)), static_cast<double>(mag * std::sin(ph)));
    } else {
      xs = std::exp(-si * lx);
    }
    CompensatedSum<cplx> tail;
    tail += xs * x / (si - 1.0);
    tail += 0.5 * xs;
    cplx term = si * xs / x;  // (s)_{1} x^{-s-1}
    const double scale = std::abs(xs) + 1e-300;
    for (int j = 1; j <= static_cast<int>(kBernoulliOverFactorial.size()); ++j) {
      if (j > 1) term *= (si + (2.0 * j - 3.0)) * (si + (2.0 * j - 2.0)) * ix2;
      const cplx c = kBernoulliOverFactorial[j - 1] * term;
      tail += c;
      if (j >= 8 && std::abs(c) < 1e-18 * scale) break;
    }
    acc += tail.value();
    out[i] = acc.value();
  }
}

}  // namespace

cplx hurwitz_zeta(cplx s, double r) {
  cplx out;
  hurwitz_batch(&s, 1, r, &out);
  return out;
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx riemann_zeta_deriv(int j, cplx s) {
  require(j >= 0 && j <= 2, "riemann_zeta_deriv: j must be in 0..2");
  const double dist = std::abs(s - 1.0);
  if (dist < 1e-12) fail(ErrorKind::PoleAtOne, "riemann_zeta_deriv: pole at s = 1");
  const double rho = std::min(0.5, 0.5 * dist);
  double fact = 1.0;
  for (int i = 2; i <= j; ++i) fact *= i;

  auto estimate = [&](int n, const std::vector<cplx>& vals, int stride) {
    CompensatedSum<cplx> acc;
    const int m = n / stride;
    for (int i = 0; i < n; i += stride) {
      const cplx w = std::polar(1.0, -kTwoPi * j * i / n);
      acc += vals[i] * w;
    }
    return fact / std::pow(rho, j) * acc.value() / static_cast<double>(m);
  };
  for (int n = 64; n <= 1024; n *= 2) {
    std::vector<cplx> pts(n), vals(n);
    for (int i = 0; i < n; ++i) pts[i] = s + std::polar(rho, kTwoPi * i / n);
    hurwitz_batch(pts.data(), n, 1.0, vals.data());
    const cplx full = estimate(n, vals, 1), half = estimate(n, vals, 2);
    if (std::abs(full - half) <= 1e-12 * std::max(1.0, std::abs(full))) return full;
  }
  fail(ErrorKind::ConvergenceFailure, "riemann_zeta_deriv: contour quadrature did not stabilize");
}

double hurwitz_taylor1(double r, const AccuracySpec& acc) {
  acc.validate();
  require(r > 0.0, "hurwitz_taylor1: r must be positive");
  const double rho = acc.contour_radius;
  // Conjugate symmetry: only nodes on the upper half circle are needed.
  for (int n = 32; n <= acc.max_terms; n *= 2) {
    const int half = n / 2;
    std::vector<cplx> pts(half + 1), vals(half + 1);
    for (int i = 0; i <= half; ++i) pts[i] = 1.0 + std::polar(rho, kTwoPi * i / n);
    hurwitz_batch(pts.data(), half + 1, r, vals.data());
    auto coeff = [&](int stride) {
      const int m = n / stride;
      CompensatedSum<double> s;
      for (int i = 0; i <= half; i += stride) {
        const cplx p = pts[i] - 1.0;
        const cplx g = vals[i] - 1.0 / p;
        const double term = (g * std::polar(1.0, -kTwoPi * i / n)).real();
        s += (i == 0 || i == half) ? term : 2.0 * term;
      }
      return s.value() / (m * rho);
    };
    const double full = coeff(1), coarse = coeff(2);
    if (std::abs(full - coarse) <= std::max(acc.rel_tol * std::abs(full), 1e-14)) return full;
  }
  fail(ErrorKind::ConvergenceFailure, "stieltjes_gamma: contour quadrature did not stabilize");
}

double stieltjes_gamma(int j, double r, const AccuracySpec& acc) {
  require(j == 0 || j == 1, "stieltjes_gamma: j must be 0 or 1");
  require(r > 0.0, "stieltjes_gamma: r must be positive");
  if (j == 0) return -digamma(r);
  return -hurwitz_taylor1(r, acc);
}

scan::ScanReport berndt_check(int j, std::span<const double> x_grid) {
  require(j == 0 || j == 1, "berndt_check: j must be 0 or 1");
  scan::ScanReport rep;
  rep.name = "berndt-j" + std::to_string(j);
  rep.range = "grid of " + std::to_string(x_grid.size()) + " points in (0,1)";
  double sup_small = 0.0, sup_large = 0.0;
  for (double x : x_grid) {
    require(x > 0.0 && x < 1.0, "berndt_check: grid values must lie in (0,1)");
    const double lg = std::abs(std::log(x));
    const double ratio = std::abs(stieltjes_gamma(j, x)) * x / std::max(1.0, std::pow(lg, j));
    std::ostringstream key;
    key.precision(10);
    key << "x=" << x;
    rep.observe(key.str(), ratio);
    ++rep.checked;
    (x < 0.01 ? sup_small : sup_large) = std::max(x < 0.01 ? sup_small : sup_large, ratio);
  }
  rep.stats["sup_small"] = sup_small;
  rep.stats["sup_large"] = sup_large;
  if (sup_large > 0.0 && sup_small > 2.0 * sup_large) rep.violate("sup_small", sup_small, 2.0 * sup_large);
  return rep;
}

// ---- Bessel ----

namespace {

// Hankel asymptotic expansion, valid for x well above the order.
double bessel_hankel_asym(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0, term = 1.0, prev = 1e300;
  for (int k = 1; k < 200; ++k) {
    term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    const double a = std::abs(term);
    if (a > prev) break;  // asymptotic series started diverging
    prev = a;
    const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
    if (a < 1e-17) break;
  }
  const double phi = (0.5 * nu + 0.25) * kPi;
  const double cx = std::cos(x), sx = std::sin(x), cp = std::cos(phi), sp = std::sin(phi);
  const double cchi = cx * cp + sx * sp, schi = sx * cp - cx * sp;
  return std::sqrt(2.0 / (kPi * x)) * (p * cchi - q * schi);
}

// Miller's backward recurrence normalized by J_0 + 2 sum J_{2k} = 1.
double bessel_miller(int nu, double x) {
  const int top = std::max(nu, static_cast<int>(x));
  int m = top + 20 + static_cast<int>(std::sqrt(60.0 * (top + 1)));
  if (m % 2) ++m;
  double jp = 0.0, j = 1e-300, result = 0.0, norm = 0.0;
  for (int k = m; k >= 1; --k) {
    const double jm = 2.0 * k / x * j - jp;  // J_{k-1}
    jp = j;
    j = jm;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp *= 1e-250;
      result *= 1e-250;
      norm *= 1e-250;
    }
    if (k - 1 == nu) result = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
  }
  norm += j;  // J_0
  return result / norm;
}

}  // namespace

double bessel_j(int nu, double x) {
  require(nu >= 0, "bessel_j: order must be nonnegative");
  require(x >= 0.0 && std::isfinite(x), "bessel_j: x must be finite and nonnegative");
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  if (x < 1e-3 || (x < 2.0 && nu > 0)) return bessel_j_series(nu, x);
  if (x <= 25.0 || nu >= x) return bessel_miller(nu, x);
  double j0 = bessel_hankel_asym(0, x);
  if (nu == 0) return j0;
  double j1 = bessel_hankel_asym(1, x);
  for (int k = 1; k < nu; ++k) {
    const double j2 = 2.0 * k / x * j1 - j0;
    j0 = j1;
    j1 = j2;
  }
  return j1;
}

double bessel_j_series(int nu, double x) {
  require(nu >= 0, "bessel_j_series: order must be nonnegative");
  require(x >= 0.0, "bessel_j_series: x must be nonnegative");
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  const double h = 0.5 * x, h2 = h * h;
  double term = std::exp(nu * std::log(h) - std::lgamma(nu + 1.0));
  CompensatedSum<double> s;
  s += term;
  for (int l = 1; l < 1000; ++l) {
    term *= -h2 / (static_cast<double>(l) * (l + nu));
    s += term;
    if (l > h && std::abs(term) < 1e-18 * std::abs(s.value())) break;
  }
  return s.value();
}

double bessel_series_2pi(int k, double x) {
  require(k >= 1, "bessel_series_2pi: k must be >= 1");
  require(x >= 0.0, "bessel_series_2pi: x must be nonnegative");
  const int nu = k - 1;
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  const double y = kPi * x, y2 = y * y;
  double term = std::exp(nu * std::log(y) - std::lgamma(nu + 1.0));  // l = 0
  CompensatedSum<double> s;
  s += term;
  for (int l = 1; l < 1000; ++l) {
    term *= -y2 / (static_cast<double>(l) * (l + nu));
    s += term;
    if (l > y && std::abs(term) < 1e-18 * std::abs(s.value())) break;
  }
  return s.value();
}

double bessel_j_integral(int nu, double x) {
  require(nu >= 0 && x >= 0.0, "bessel_j_integral: invalid arguments");
  const int n = nu + static_cast<int>(1.2 * x) + 64;
  CompensatedSum<double> s;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    s += std::cos(nu * t - x * std::sin(t));
  }
  return s.value() / n;
}

double bessel_j_bound(int nu, double x) {
  require(nu >= 0 && x >= 0.0, "bessel_j_bound: invalid arguments");
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  return std::min(1.0, std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0)));
}

std::vector<double> bessel_zeros(int nu, int n) {
  require(nu >= 0 && n >= 0, "bessel_zeros: invalid arguments");
  std::vector<double> zeros;
  zeros.reserve(n);
  double a = std::max(static_cast<double>(nu), 0.5), fa = bessel_j(nu, a);
  const double step = 0.5;
  while (static_cast<int>(zeros.size()) < n) {
    const double b = a + step, fb = bessel_j(nu, b);
    if (fa == 0.0) {
      zeros.push_back(a);
    } else if (fa * fb < 0.0) {
      // Illinois variant of regula falsi
      double lo = a, hi = b, flo = fa, fhi = fb;
      int side = 0;
      double c = lo;
      for (int it = 0; it < 100; ++it) {
        c = (lo * fhi - hi * flo) / (fhi - flo);
        const double fc = bessel_j(nu, c);
        if (fc == 0.0 || hi - lo < 1e-15 * hi) break;
        if (fc * fhi < 0.0) {
          lo = hi;
          flo = fhi;
          hi = c;
          fhi = fc;
          side = 0;
        } else {
          hi = c;
          fhi = fc;
          if (side == 1) flo *= 0.5;
          side = 1;
        }
        if (std::abs(hi - lo) < 4e-16 * std::abs(c)) break;
      }
      // Newton polish with J' = (nu/x) J_nu - J_{nu+1}
      for (int it = 0; it < 4; ++it) {
        const double f = bessel_j(nu, c);
        const double df = nu / c * f - bessel_j(nu + 1, c);
        if (df == 0.0) break;
        const double next = c - f / df;
        if (!(next > a && next < b)) break;
        c = next;
      }
      zeros.push_back(c);
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

// ---- Hankel moments ----

namespace {

void check_strip(cplx mu, int nu, double a, int j) {
  require(nu >= 1, "hankel_moment: nu must be >= 1");
  require(a > 0.0, "hankel_moment: a must be positive");
  require(j >= 0 && j <= 2, "hankel_moment: j must be in 0..2");
  if (!(mu.real() > -nu - 1.0 && mu.real() < 0.5))
    fail(ErrorKind::DomainViolation, "hankel_moment: need -nu-1 < Re mu < 1/2");
}

cplx hankel_j0(cplx mu, int nu, double a) {
  const cplx p = 0.5 * (1.0 + nu + mu), m = 0.5 * (1.0 + nu - mu);
  if (is_nonpositive_integer(m)) return 0.0;
  return std::exp(mu * std::log(2.0) - (mu + 1.0) * std::log(a) + log_gamma(p) - log_gamma(m));
}

cplx hankel_j1(cplx mu, int nu, double a) {
  const cplx p = 0.5 * (1.0 + nu + mu), m = 0.5 * (1.0 + nu - mu);
  const cplx p1 = std::log(a) - std::log(2.0) - 0.5 * digamma(m) - 0.5 * digamma(p);
  return -hankel_j0(mu, nu, a) * p1;
}

}  // namespace

cplx hankel_moment(cplx mu, int nu, double a, int j) {
  check_strip(mu, nu, a, j);
  switch (j) {
    case 0: return hankel_j0(mu, nu, a);
    case 1: return hankel_j1(mu, nu, a);
    default: {
      const double h = 1e-4;
      return (hankel_j1(mu + h, nu, a) - hankel_j1(mu - h, nu, a)) / (2.0 * h);
    }
  }
}

HankelQuadrature hankel_moment_quadrature(cplx mu, int nu, double a, int j, int zeros) {
  check_strip(mu, nu, a, j);
  require(zeros >= 60, "hankel_moment_quadrature: need at least 60 zeros");
  const double la = std::log(a);
  // substitute t = a x:  a^{-mu-1} int t^mu (log t - log a)^j J_nu(t) dt
  auto f = [&](double t) -> cplx {
    const double lt = std::log(t);
    const cplx pw = std::exp(mu * lt);
    const double lg = j == 0 ? 1.0 : std::pow(lt - la, j);
    return pw * lg * bessel_j(nu, t);
  };
  const std::vector<double> z = bessel_zeros(nu, zeros);
  std::vector<cplx> partial;
  partial.reserve(zeros);
  cplx run = quad::tanh_sinh(f, 0.0, z[0], 1e-14, 10).value;
  partial.push_back(run);
  for (int k = 0; k + 1 < zeros; ++k) {
    run += quad::fixed_gauss(f, z[k], z[k + 1], 24);
    partial.push_back(run);
  }
  // repeated averaging of the trailing partial sums (Euler transform)
  auto accel = [&](std::size_t end) {
    const std::size_t w = 40;
    std::vector<cplx> v(partial.begin() + static_cast<long>(end - w), partial.begin() + static_cast<long>(end));
    for (std::size_t level = 1; level < w; ++level)
      for (std::size_t i = 0; i + level < w; ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
    return v[0];
  };
  const cplx est = accel(partial.size()), est2 = accel(partial.size() - 1);
  const cplx scale = std::exp(-(mu + 1.0) * la);
  return {scale * est, std::abs(scale * (est - est2)), zeros};
}

scan::ScanReport hankel_suite(double tol) {
  scan::ScanReport rep;
  rep.name = "hankel";
  rep.range = "20 points, nu in {2,4}, a in {1, 2.5}, j in {0,1,2}";
  struct Point {
    cplx mu;
    int nu;
    double a;
    int j;
  };
  const Point pts[] = {{{-0.5, 0.0}, 2, 1.0, 0},  {{-0.5, 0.0}, 2, 1.0, 1},  {{-0.5, 0.0}, 2, 1.0, 2},
                       {{0.2, 0.0}, 2, 1.0, 0},   {{0.2, 0.0}, 2, 2.5, 1},   {{-1.0, 0.5}, 2, 1.0, 0},
                       {{-1.0, 0.5}, 2, 2.5, 1},  {{-1.0, 0.5}, 2, 1.0, 2},  {{-2.0, 0.0}, 2, 1.0, 0},
                       {{-2.0, 0.0}, 2, 2.5, 2},  {{-0.3, 1.0}, 2, 1.0, 1},  {{-0.5, 0.0}, 4, 1.0, 0},
                       {{-0.5, 0.0}, 4, 2.5, 1},  {{-3.0, 0.0}, 4, 1.0, 0},  {{-3.0, 0.0}, 4, 1.0, 2},
                       {{0.0, 2.0}, 4, 2.5, 0},   {{-1.5, -1.0}, 4, 1.0, 1}, {{0.3, 0.0}, 4, 1.0, 0},
                       {{-4.0, 0.5}, 4, 2.5, 1},  {{-0.8, 0.0}, 4, 1.0, 2}};
  for (const auto& p : pts) {
    const cplx closed = hankel_moment(p.mu, p.nu, p.a, p.j);
    const auto quad = hankel_moment_quadrature(p.mu, p.nu, p.a, p.j);
    const double dev = std::abs(closed - quad.value) / std::max(1.0, std::abs(closed));
    std::ostringstream key;
    key << "mu=" << p.mu.real() << (p.mu.imag() < 0 ? "" : "+") << p.mu.imag() << "i,nu=" << p.nu << ",a=" << p.a
        << ",j=" << p.j;
    rep.record(key.str(), dev, tol, dev <= tol);
  }
  return rep;
}

}  // namespace sixmoment::special
