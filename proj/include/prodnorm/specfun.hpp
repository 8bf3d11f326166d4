#pragma once

// Special functions on the positive real axis: modified Bessel functions,
// Kummer and Tricomi confluent hypergeometric functions, the upper
// incomplete gamma function and the small combinatorial helpers they share.
//
// All functions are pure and reentrant.

namespace prodnorm::specfun {

/// Truncation policy for the series and asymptotic expansions below.
struct SpecFunConfig {
  double series_tol = 1e-16;  ///< relative size of a term that counts as negligible
  int max_terms = 500;        ///< hard cap on summed terms
  double asym_switch = 30.0;  ///< large-argument expansions are used beyond this

  /// Throws Error(parameter) when a field violates its invariant.
  void validate() const;
};

/// Rising factorial (v)_j = v (v+1) ... (v+j-1), with (v)_0 = 1.
double pochhammer(double v, int j);

/// Generalised binomial coefficient r (r-1) ... (r-k+1) / k!.
double gen_binom(double r, int k);

/// 1/Gamma(z), zero at the poles z = 0, -1, -2, ...
double rgamma(double z);

/// Coefficients of the large-argument Bessel expansions:
/// a_k(nu) = (-1)^k (1/2-nu)_k (1/2+nu)_k / (k! 2^k).
double a_k_coeff(double nu, int k);

/// Modified Bessel function of the first kind, x >= 0.
double bessel_i(double nu, double x, const SpecFunConfig& cfg = {});
/// exp(-x) I_nu(x).
double bessel_i_scaled(double nu, double x, const SpecFunConfig& cfg = {});

/// Modified Bessel function of the second kind, x > 0. Even in nu.
double bessel_k(double nu, double x, const SpecFunConfig& cfg = {});
/// exp(x) K_nu(x).
double bessel_k_scaled(double nu, double x, const SpecFunConfig& cfg = {});

/// Kummer's confluent hypergeometric function M(a, b, x) = 1F1(a; b; x).
double kummer_m(double a, double b, double x, const SpecFunConfig& cfg = {});

/// Tricomi's confluent hypergeometric function U(a, b, x), x > 0.
/// Requires a > 0 or a - b + 1 > 0.
double tricomi_u(double a, double b, double x, const SpecFunConfig& cfg = {});
/// x^a U(a, b, x); bounded as x -> inf, avoids under/overflow for large a.
double tricomi_u_scaled(double a, double b, double x, const SpecFunConfig& cfg = {});

/// Upper incomplete gamma function Gamma(r, x) for real r and x > 0.
double upper_inc_gamma(double r, double x, const SpecFunConfig& cfg = {});

namespace detail {
// Individual evaluation branches, exposed for crossover tests.
double bessel_i_series_scaled(double nu, double x, const SpecFunConfig& cfg);
double bessel_i_asymptotic_scaled(double nu, double x, const SpecFunConfig& cfg);
double bessel_k_integral_scaled(double nu, double x);
double bessel_k_asymptotic_scaled(double nu, double x, const SpecFunConfig& cfg);
double kummer_m_series(double a, double b, double x, const SpecFunConfig& cfg);
double kummer_m_finite(double a, double b, double x);
/// Euler integral for x^a U(a, b, x); requires a > 0.
double tricomi_u_euler_scaled(double a, double b, double x);
/// Large-x expansion of x^a U(a, b, x). Returns NaN when the expansion does
/// not reach the configured tolerance before its terms start to grow.
double tricomi_u_asymptotic_scaled(double a, double b, double x, const SpecFunConfig& cfg);

/// Accumulates a series and applies the shared stopping rule: stop once
/// |term| <= tol |sum| for three consecutive terms.
class SeriesSum {
 public:
  explicit SeriesSum(double tol) : tol_(tol) {}
  /// Adds a term; returns true once the series counts as converged.
  bool add(double term);
  double value() const { return sum_; }

 private:
  double tol_;
  double sum_ = 0.0;
  int quiet_ = 0;
};
}  // namespace detail

}  // namespace prodnorm::specfun
