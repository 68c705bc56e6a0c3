#include "sixmoment/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "sixmoment/error.hpp"

namespace sixmoment::quad {

const Rule& gauss_legendre(int n) {
  require(n >= 1 && n <= 512, "gauss_legendre: n out of range");
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return cache.emplace(n, std::move(r)).first->second;
}

cplx fixed_gauss(const ComplexFn& f, double a, double b, int n) {
  const Rule& r = gauss_legendre(n);
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  CompensatedSum<cplx> s;
  for (int i = 0; i < n; ++i) s += r.weights[i] * f(m + h * r.nodes[i]);
  return h * s.value();
}

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

void gk15(const ComplexFn& f, double a, double b, cplx& val, double& err) {
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  cplx fc = f(m);
  cplx rk = fc * kWgk[7];
  cplx rg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    cplx f1 = f(m - h * kXgk[j]);
    cplx f2 = f(m + h * kXgk[j]);
    rk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) rg += kWg[j / 2] * (f1 + f2);
  }
  val = rk * h;
  err = std::abs((rk - rg) * h);
}

void adapt(const ComplexFn& f, double a, double b, double abs_tol, double rel_tol, int depth,
           Result& out) {
  const double m = 0.5 * (a + b);
  cplx l, r;
  double el, er;
  gk15(f, a, m, l, el);
  gk15(f, m, b, r, er);
  out.evaluations += 30;
  cplx both = l + r;
  double e = el + er;
  if (depth <= 0 || e <= std::max(abs_tol, rel_tol * std::abs(both))) {
    out.value += both;
    out.error_estimate += e;
    return;
  }
  adapt(f, a, m, 0.5 * abs_tol, rel_tol, depth - 1, out);
  adapt(f, m, b, 0.5 * abs_tol, rel_tol, depth - 1, out);
}

}  // namespace

Result adaptive(const ComplexFn& f, double a, double b, double abs_tol, double rel_tol, int max_depth) {
  Result out{{0.0, 0.0}, 0.0, 15};
  if (a == b) return out;
  cplx v;
  double e;
  gk15(f, a, b, v, e);
  if (e <= std::max(abs_tol, rel_tol * std::abs(v))) {
    out.value = v;
    out.error_estimate = e;
    return out;
  }
  adapt(f, a, b, abs_tol, rel_tol, max_depth, out);
  return out;
}

Result tanh_sinh(const ComplexFn& f, double a, double b, double rel_tol, int max_levels) {
  const double len = b - a;
  const double tmax = 3.2;  // weights below ~1e-30 beyond this
  auto eval = [&](double t) -> cplx {
    const double u = 0.5 * kPi * std::sinh(t);
    const double w = 0.5 * kPi * std::cosh(t);
    // distances from the endpoints, computed without cancellation
    const double da = len / (1.0 + std::exp(-2.0 * u));
    const double db = len / (1.0 + std::exp(2.0 * u));
    const double sech = 1.0 / std::cosh(u);
    const double weight = 0.5 * len * w * sech * sech;
    if (weight == 0.0 || da == 0.0 || db == 0.0) return {0.0, 0.0};
    const double x = da < db ? a + da : b - db;
    return weight * f(x);
  };
  double h = 0.5;
  CompensatedSum<cplx> s;
  s += eval(0.0);
  for (double t = h; t <= tmax; t += h) {
    s += eval(t);
    s += eval(-t);
  }
  cplx prev = h * s.value();
  int evals = 1 + 2 * static_cast<int>(tmax / h);
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    for (double t = h; t <= tmax; t += 2.0 * h) {
      s += eval(t);
      s += eval(-t);
      evals += 2;
    }
    cplx cur = h * s.value();
    double diff = std::abs(cur - prev);
    if (level >= 3 && diff <= rel_tol * std::abs(cur)) return {cur, diff, evals};
    prev = cur;
  }
  return {prev, std::abs(prev) * rel_tol * 10, evals};
}

}  // namespace sixmoment::quad
