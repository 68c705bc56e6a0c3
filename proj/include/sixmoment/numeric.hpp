#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <type_traits>

namespace sixmoment {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

/// Neumaier's compensated summation; works for double and cplx.
template <class T>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(const T& x) {
    add(x);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  void add(const T& x) {
    if constexpr (std::is_same_v<T, cplx>) {
      double re = sum_.real(), im = sum_.imag();
      double cre = comp_.real(), cim = comp_.imag();
      add_real(re, cre, x.real());
      add_real(im, cim, x.imag());
      sum_ = {re, im};
      comp_ = {cre, cim};
    } else {
      add_real(sum_, comp_, x);
    }
  }
  static void add_real(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }

  T sum_{};
  T comp_{};
};

/// e(x) = exp(2 pi i x).
inline cplx expi2pi(double x) {
  const double a = kTwoPi * x;
  return {std::cos(a), std::sin(a)};
}

/// exp(2 pi i num/den) with the fraction reduced exactly before conversion.
inline cplx root_of_unity(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  // Fold into (-1/2, 1/2] to keep the angle small.
  if (2 * r > den) r -= den;
  return expi2pi(static_cast<double>(r) / static_cast<double>(den));
}

/// i^n computed from n mod 4.
inline cplx ipow(long long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace sixmoment
