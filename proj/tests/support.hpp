#pragma once

// Oracles shared by the unit suites and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "prodnorm/quadrature.hpp"
#include "prodnorm/specfun.hpp"

namespace prodnorm::testing {

inline double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

/// Left side of int_0^inf x^{mu-1/2} e^{-alpha x} I_{2nu}(2 b sqrt x) dx by
/// quadrature after x = t^2, with the Bessel factor exponentially scaled.
inline double bessel_laplace_lhs(double mu, double nu, double alpha, double b) {
  auto f = [&](double t) {
    if (t == 0.0) return 0.0;
    const double z = 2.0 * b * t;
    return 2.0 * std::pow(t, 2.0 * mu) * std::exp(-alpha * t * t + z) * specfun::bessel_i_scaled(2.0 * nu, z);
  };
  quad::Options opt;
  opt.rel_tol = 1e-12;
  const double peak = std::max(1.0, b / alpha);
  return quad::integrate(f, 0.0, peak, opt).value + quad::integrate_to_infinity(f, peak, peak, opt).value;
}

/// Right side of the same integral through Kummer's M.
inline double bessel_laplace_rhs(double mu, double nu, double alpha, double b) {
  const double s = mu + nu + 0.5;
  return std::exp(std::lgamma(s) - std::lgamma(2.0 * nu + 1.0)) * std::pow(b, 2.0 * nu) / std::pow(alpha, s) *
         specfun::kummer_m(s, 2.0 * nu + 1.0, b * b / alpha);
}

/// Density of the sum of n products of independent standard normals:
/// |x|^{(n-1)/2} K_{(n-1)/2}(|x|) / (2^{(n-1)/2} sqrt(pi) Gamma(n/2)).
inline double centred_independent_pdf(int n, double x) {
  const double nu = 0.5 * (n - 1);
  const double ax = std::abs(x);
  return std::pow(ax, nu) * specfun::bessel_k(nu, ax) /
         (std::pow(2.0, nu) * std::sqrt(std::numbers::pi) * std::tgamma(0.5 * n));
}

/// x^{-m} e^{a x - b sqrt x} int_x^inf t^m e^{-a t + b sqrt t} sum_l u_l t^{-l/2} dt
inline double scaled_exp_tail(const std::vector<double>& u, double a, double b, double m, double x) {
  const double sx = std::sqrt(x);
  auto f = [&](double v) {
    const double t = x + v;
    double poly = 0.0;
    for (std::size_t l = 0; l < u.size(); ++l) poly += u[l] * std::pow(t, -0.5 * l);
    return std::exp(m * std::log1p(v / x) - a * v + b * v / (std::sqrt(t) + sx)) * poly;
  };
  quad::Options opt;
  opt.rel_tol = 1e-14;
  return quad::integrate_to_infinity(f, 0.0, 1.0 / a, opt).value;
}

/// (1/a) sum_k coef_k x^{-step k}: a truncated term-by-term tail.
inline double truncation(const std::vector<double>& coef, double a, double x, double step) {
  double acc = 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k) acc += coef[k] * std::pow(x, -step * k);
  return acc / a;
}

}  // namespace prodnorm::testing
