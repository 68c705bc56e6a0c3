#pragma once

#include <functional>
#include <vector>

#include "sixmoment/numeric.hpp"

namespace sixmoment::quad {

struct Rule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, cached per n.
const Rule& gauss_legendre(int n);

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;

struct Result {
  cplx value;
  double error_estimate;
  int evaluations;
};

/// Fixed Gauss-Legendre on [a, b].
cplx fixed_gauss(const ComplexFn& f, double a, double b, int n = 32);

/// Adaptive Gauss-Kronrod 7/15 with recursive bisection.
Result adaptive(const ComplexFn& f, double a, double b, double abs_tol, double rel_tol,
                int max_depth = 40);

/// Tanh-sinh quadrature on [a, b]; tolerant of integrable endpoint singularities.
Result tanh_sinh(const ComplexFn& f, double a, double b, double rel_tol = 1e-13, int max_levels = 8);

}  // namespace sixmoment::quad
