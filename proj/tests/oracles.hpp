#pragma once

// Test-only numerical oracles. These deliberately avoid the library's own
// code paths: quadrature instead of erf, dense double algebra instead of the
// exact symbolic engine, explicit polynomial coefficients instead of the
// recurrence.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

namespace detail {

inline double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                              double fa, double fm, double fb, double whole, double tol,
                              int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 48) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Mass of a centered Gaussian of the given variance on [-half_width, half_width].
inline double gaussian_mass(double variance, double half_width, double tol = 1e-13) {
  const double norm = 1.0 / std::sqrt(2.0 * kPi * variance);
  return adaptive_simpson(
      [&](double x) { return norm * std::exp(-x * x / (2.0 * variance)); }, -half_width,
      half_width, tol);
}

/// erf by direct quadrature of (2/sqrt(pi)) exp(-t^2) on [0, x].
inline double erf_by_quadrature(double x, double tol = 1e-13) {
  const double scale = 2.0 / std::sqrt(kPi);
  if (x == 0.0) return 0.0;
  const double v = adaptive_simpson([](double t) { return std::exp(-t * t); }, 0.0,
                                    std::abs(x), tol);
  return (x > 0.0 ? scale : -scale) * v;
}

// --- dense row-major double matrices, independent of gkpft::Mat ---

inline std::vector<double> dense_mul(const std::vector<double>& a, const std::vector<double>& b,
                                     int n) {
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < n; ++c)
        out[static_cast<std::size_t>(r) * n + c] +=
            a[static_cast<std::size_t>(r) * n + k] * b[static_cast<std::size_t>(k) * n + c];
  return out;
}

inline std::vector<double> dense_transpose(const std::vector<double>& a, int n) {
  std::vector<double> out(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out[static_cast<std::size_t>(c) * n + r] = a[static_cast<std::size_t>(r) * n + c];
  return out;
}

/// Laguerre L_n(x) from its exact coefficients
/// c_k = (-1)^k C(n, k) / k!, evaluated by Horner in long double. Exact
/// integer arithmetic holds for the n <= 20 used in tests.
inline double laguerre_by_coefficients(int n, double x) {
  if (n < 0 || n > 20) throw std::invalid_argument("laguerre_by_coefficients: n out of range");
  std::vector<long double> coeff(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    long long binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
    long long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    const long double c = static_cast<long double>(binom) / static_cast<long double>(fact);
    coeff[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : -c;
  }
  long double acc = 0.0L;
  for (int k = n; k >= 0; --k) acc = acc * x + coeff[static_cast<std::size_t>(k)];
  return static_cast<double>(acc);
}

/// 2-D convolution of a radial function f(r^2) with an isotropic Gaussian of
/// per-quadrature variance tau2, evaluated at radius r0. Polar coordinates
/// around the evaluation point: the angular integral uses the trapezoid rule
/// (periodic, spectrally convergent), the radial one adaptive Simpson.
inline double convolve_radial_gaussian(const std::function<double(double)>& f_of_r2, double r0,
                                       double tau2, double tol = 1e-12) {
  const double norm = 1.0 / (2.0 * kPi * tau2);
  const auto angular_mean = [&](double rho) {
    int n = 64;
    double prev = 0.0;
    for (int pass = 0; pass < 9; ++pass) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * kPi * i / n;
        const double arg = r0 * r0 + rho * rho - 2.0 * r0 * rho * std::cos(phi);
        sum += f_of_r2(arg);
      }
      const double mean = sum / n;
      if (pass > 0 && std::abs(mean - prev) <= 1e-13 * (std::abs(mean) + 1.0)) return mean;
      prev = mean;
      n *= 2;
    }
    return prev;
  };
  const double rho_max = 14.0 * std::sqrt(tau2);
  return adaptive_simpson(
      [&](double rho) {
        return 2.0 * kPi * rho * norm * std::exp(-rho * rho / (2.0 * tau2)) * angular_mean(rho);
      },
      0.0, rho_max, tol);
}

}  // namespace oracles
