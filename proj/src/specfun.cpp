#include "prodnorm/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "prodnorm/error.hpp"
#include "prodnorm/quadrature.hpp"

namespace prodnorm::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonpositive_integer(double z) { return z <= 0.0 && z == std::nearbyint(z); }

// Sign of Gamma(z) for z not a pole.
double gamma_sign(double z) {
  if (z > 0.0) return 1.0;
  return (static_cast<long>(std::ceil(-z)) % 2 == 0) ? 1.0 : -1.0;
}

// Cap on the series branch of I_nu so that the pre-scaled leading term
// cannot underflow.
constexpr double kBesselSeriesCap = 500.0;

double bessel_switch(double nu, const SpecFunConfig& cfg) {
  return std::min(cfg.asym_switch * std::max(1.0, nu * nu), kBesselSeriesCap);
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) fail(ErrorKind::domain, std::string(what) + ": argument must be positive");
}

}  // namespace

void SpecFunConfig::validate() const {
  if (!(series_tol > 0.0)) fail(ErrorKind::parameter, "series_tol must be positive");
  if (max_terms < 50) fail(ErrorKind::parameter, "max_terms must be at least 50");
  if (!(asym_switch > 0.0)) fail(ErrorKind::parameter, "asym_switch must be positive");
}

namespace detail {

bool SeriesSum::add(double term) {
  sum_ += term;
  if (std::abs(term) <= tol_ * std::abs(sum_)) {
    ++quiet_;
  } else {
    quiet_ = 0;
  }
  return quiet_ >= 3;
}

}  // namespace detail

double pochhammer(double v, int j) {
  double out = 1.0;
  for (int i = 0; i < j; ++i) out *= v + i;
  return out;
}

double gen_binom(double r, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= (r - i) / (i + 1);
  return out;
}

double rgamma(double z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return 1.0 / std::tgamma(z);
}

double a_k_coeff(double nu, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= -(0.5 - nu + i) * (0.5 + nu + i) / (2.0 * (i + 1));
  return out;
}

// ---------------------------------------------------------------------------
// Modified Bessel functions

namespace detail {

double bessel_i_series_scaled(double nu, double x, const SpecFunConfig& cfg) {
  if (is_nonpositive_integer(nu)) nu = -nu;  // I_{-m} = I_m
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : kInf;
  }
  const double half = 0.5 * x;
  double term = gamma_sign(nu + 1.0) *
                std::exp(nu * std::log(half) - x - std::lgamma(nu + 1.0));
  const double q = half * half;
  SeriesSum sum(cfg.series_tol);
  for (int k = 0; k < cfg.max_terms; ++k) {
    if (sum.add(term)) return sum.value();
    term *= q / ((k + 1.0) * (k + nu + 1.0));
  }
  fail(ErrorKind::nonconvergence, "bessel_i: power series did not converge");
}

double bessel_i_asymptotic_scaled(double nu, double x, const SpecFunConfig& cfg) {
  SeriesSum sum(cfg.series_tol);
  double ak = 1.0;
  double power = 1.0;
  double last = kInf;
  for (int k = 0; k < cfg.max_terms; ++k) {
    const double term = ((k % 2 == 0) ? 1.0 : -1.0) * ak * power;
    if (std::abs(term) > last) break;  // optimal truncation
    last = std::abs(term);
    if (sum.add(term)) break;
    ak *= -(0.5 - nu + k) * (0.5 + nu + k) / (2.0 * (k + 1));
    power /= x;
  }
  return sum.value() / std::sqrt(2.0 * kPi * x);
}

double bessel_k_integral_scaled(double nu, double x) {
  // exp(x) K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt. The
  // integrand is analytic in a strip around the real axis, so the plain
  // trapezoidal rule converges geometrically in 1/h.
  const double h = std::min(0.05, 0.5 / std::sqrt(x));
  const double t_peak = std::asinh(nu / x);
  auto f = [&](double t) {
    const double sh = std::sinh(0.5 * t);
    return 0.5 * (std::exp(-2.0 * x * sh * sh + nu * t) + std::exp(-2.0 * x * sh * sh - nu * t));
  };
  double sum = 0.5 * f(0.0);
  for (int k = 1; k < 2000000; ++k) {
    const double t = k * h;
    const double v = f(t);
    sum += v;
    if (t > t_peak && v <= 1e-18 * sum) break;
  }
  return h * sum;
}

double bessel_k_asymptotic_scaled(double nu, double x, const SpecFunConfig& cfg) {
  SeriesSum sum(cfg.series_tol);
  double ak = 1.0;
  double power = 1.0;
  double last = kInf;
  for (int k = 0; k < cfg.max_terms; ++k) {
    const double term = ak * power;
    if (term == 0.0) break;  // half-integer order: expansion terminates
    if (std::abs(term) > last) break;
    last = std::abs(term);
    if (sum.add(term)) break;
    ak *= -(0.5 - nu + k) * (0.5 + nu + k) / (2.0 * (k + 1));
    power /= x;
  }
  return sum.value() * std::sqrt(kPi / (2.0 * x));
}

}  // namespace detail

double bessel_i_scaled(double nu, double x, const SpecFunConfig& cfg) {
  if (x < 0.0) fail(ErrorKind::domain, "bessel_i: x must be nonnegative");
  if (is_nonpositive_integer(nu)) nu = -nu;
  if (x > bessel_switch(nu, cfg)) return detail::bessel_i_asymptotic_scaled(nu, x, cfg);
  return detail::bessel_i_series_scaled(nu, x, cfg);
}

double bessel_i(double nu, double x, const SpecFunConfig& cfg) {
  const double scaled = bessel_i_scaled(nu, x, cfg);
  return scaled * std::exp(x);
}

double bessel_k_scaled(double nu, double x, const SpecFunConfig& cfg) {
  require_positive(x, "bessel_k");
  nu = std::abs(nu);
  if (x > bessel_switch(nu, cfg)) return detail::bessel_k_asymptotic_scaled(nu, x, cfg);
  return detail::bessel_k_integral_scaled(nu, x);
}

double bessel_k(double nu, double x, const SpecFunConfig& cfg) {
  return bessel_k_scaled(nu, x, cfg) * std::exp(-x);
}

// ---------------------------------------------------------------------------
// Confluent hypergeometric functions

namespace detail {

double kummer_m_series(double a, double b, double x, const SpecFunConfig& cfg) {
  if (is_nonpositive_integer(b) && !(is_nonpositive_integer(a) && a > b))
    fail(ErrorKind::parameter, "kummer_m: b is a nonpositive integer");
  if (x < 0.0 && !is_nonpositive_integer(b - a) && !is_nonpositive_integer(b)) {
    // Kummer's transformation keeps the terms of one sign for b > a > 0.
    return std::exp(x) * kummer_m_series(b - a, b, -x, cfg);
  }
  double term = 1.0;
  SeriesSum sum(cfg.series_tol);
  for (int j = 0; j < cfg.max_terms; ++j) {
    if (sum.add(term) || term == 0.0) return sum.value();
    term *= (a + j) / ((b + j) * (j + 1.0)) * x;
  }
  fail(ErrorKind::nonconvergence, "kummer_m: series did not converge");
}

double kummer_m_finite(double a, double b, double x) {
  const int m = static_cast<int>(std::lround(a - b));
  double sum = 0.0;
  double binom = 1.0;
  double power = 1.0;
  double poch = 1.0;
  for (int j = 0; j <= m; ++j) {
    if (poch == 0.0) fail(ErrorKind::parameter, "kummer_m: (b)_j vanishes in the finite form");
    sum += binom * power / poch;
    binom *= static_cast<double>(m - j) / (j + 1);
    power *= x;
    poch *= b + j;
  }
  return std::exp(x) * sum;
}

double tricomi_u_euler_scaled(double a, double b, double x) {
  // x^a U(a,b,x) = (1/Gamma(a)) int_0^inf e^{-s} s^{a-1} (1 + s/x)^{b-a-1} ds
  const double c = b - a - 1.0;
  quad::Options opt;
  opt.rel_tol = 1e-14;

  if (a >= 1.0) {
    auto phi = [&](double s) { return (a - 1.0) * std::log(s) - s + c * std::log1p(s / x); };
    const double bb = a - 1.0 + c - x;
    const double disc = bb * bb + 4.0 * (a - 1.0) * x;
    const double peak = std::max(0.0, 0.5 * (bb + std::sqrt(std::max(0.0, disc))));
    const double offset = peak > 0.0 ? phi(peak) : 0.0;
    auto f = [&](double s) { return std::exp(phi(s) - offset); };
    double width = 1.0;
    if (peak > 0.0) {
      const double curv = (a - 1.0) / (peak * peak) + c / ((x + peak) * (x + peak));
      if (curv > 0.0) width = std::max(1.0 / std::sqrt(curv), 1e-8);
    }
    double total = 0.0;
    bool ok = true;
    if (peak > 0.0) {
      auto head = quad::integrate(f, 0.0, peak, opt);
      total += head.value;
      ok = head.converged;
    }
    auto tail = quad::integrate_to_infinity(f, peak, width, opt);
    total += tail.value;
    if (!(ok && tail.converged))
      fail(ErrorKind::nonconvergence, "tricomi_u: Euler integral did not converge");
    return std::exp(offset - std::lgamma(a)) * total;
  }

  // 0 < a < 1: substitute s = v^{1/a} to remove the endpoint singularity.
  const double inv_a = 1.0 / a;
  auto psi = [&](double s) { return -s + c * std::log1p(s / x); };
  const double s_peak = std::max(0.0, c - x);
  const double offset = psi(s_peak);
  auto f = [&](double v) { return std::exp(psi(std::pow(v, inv_a)) - offset); };
  const double v_peak = std::pow(s_peak, a);
  double total = 0.0;
  bool ok = true;
  if (v_peak > 0.0) {
    auto head = quad::integrate(f, 0.0, v_peak, opt);
    total += head.value;
    ok = head.converged;
  }
  auto tail = quad::integrate_to_infinity(f, v_peak, std::max(1.0, v_peak), opt);
  total += tail.value;
  if (!(ok && tail.converged))
    fail(ErrorKind::nonconvergence, "tricomi_u: Euler integral did not converge");
  return std::exp(offset - std::lgamma(a + 1.0)) * total;
}

double tricomi_u_asymptotic_scaled(double a, double b, double x, const SpecFunConfig& cfg) {
  const double a2 = a - b + 1.0;
  double term = 1.0;
  SeriesSum sum(cfg.series_tol);
  for (int s = 0; s < cfg.max_terms; ++s) {
    if (sum.add(term) || term == 0.0) return sum.value();
    const double next = term * (a + s) * (a2 + s) / ((s + 1.0) * (-x));
    if (std::abs(next) > std::abs(term)) {
      // Divergent tail: accept the optimally truncated sum only if the
      // smallest term is already at roundoff level.
      if (std::abs(term) <= 1e-15 * std::abs(sum.value())) return sum.value();
      return std::numeric_limits<double>::quiet_NaN();
    }
    term = next;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace detail

double kummer_m(double a, double b, double x, const SpecFunConfig& cfg) {
  const double m = a - b;
  const double mr = std::nearbyint(m);
  if (mr >= 0.0 && std::abs(m - mr) <= 1e-12 * std::max(1.0, std::abs(m)))
    return detail::kummer_m_finite(b + mr, b, x);
  return detail::kummer_m_series(a, b, x, cfg);
}

double tricomi_u_scaled(double a, double b, double x, const SpecFunConfig& cfg) {
  require_positive(x, "tricomi_u");
  if (!(a > 0.0)) {
    // U(a,b,x) = x^{1-b} U(a-b+1, 2-b, x) leaves x^a U(a,b,x) unchanged in form.
    const double a2 = a - b + 1.0;
    if (!(a2 > 0.0))
      fail(ErrorKind::parameter, "tricomi_u: need a > 0 or a - b + 1 > 0");
    b = 2.0 - b;
    a = a2;
  }
  if (x > cfg.asym_switch) {
    const double v = detail::tricomi_u_asymptotic_scaled(a, b, x, cfg);
    if (std::isfinite(v)) return v;
  }
  return detail::tricomi_u_euler_scaled(a, b, x);
}

double tricomi_u(double a, double b, double x, const SpecFunConfig& cfg) {
  const double scaled = tricomi_u_scaled(a, b, x, cfg);
  return scaled * std::exp(-a * std::log(x));
}

// ---------------------------------------------------------------------------
// Upper incomplete gamma

namespace {

// Gamma(r, x) for r > 0 from the lower-function series.
double upper_gamma_by_series(double r, double x, const SpecFunConfig& cfg) {
  double term = 1.0 / r;
  detail::SeriesSum sum(cfg.series_tol);
  for (int k = 0; k < cfg.max_terms; ++k) {
    if (sum.add(term)) break;
    term *= x / (r + k + 1.0);
  }
  const double lower = std::exp(r * std::log(x) - x) * sum.value();
  return std::tgamma(r) - lower;
}

// Gamma(r, x) by the Legendre continued fraction (modified Lentz).
double upper_gamma_by_fraction(double r, double x, const SpecFunConfig& cfg) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - r;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < cfg.max_terms * 10; ++i) {
    const double an = -i * (i - r);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= 1e-16) return std::exp(r * std::log(x) - x) * h;
  }
  fail(ErrorKind::nonconvergence, "upper_inc_gamma: continued fraction did not converge");
}

// E_1(x) = Gamma(0, x) for small x.
double exp_integral_e1_series(double x, const SpecFunConfig& cfg) {
  constexpr double euler_gamma = 0.57721566490153286061;
  double term = 1.0;
  detail::SeriesSum sum(cfg.series_tol);
  for (int k = 1; k < cfg.max_terms; ++k) {
    term *= -x / k;
    if (sum.add(term / k)) break;
  }
  return -euler_gamma - std::log(x) - sum.value();
}

}  // namespace

double upper_inc_gamma(double r, double x, const SpecFunConfig& cfg) {
  require_positive(x, "upper_inc_gamma");
  if (r > 0.0 && x < r + 1.0) return upper_gamma_by_series(r, x, cfg);
  if (x >= 1.0) return upper_gamma_by_fraction(r, x, cfg);

  // r <= 0 with small x: recur downward from an order in (0, 1] (or from 0).
  const bool integral_order = r == std::nearbyint(r);
  double s = integral_order ? 0.0 : r + std::ceil(-r);
  if (s == 0.0 && !integral_order) s = 1.0;
  double value = integral_order ? exp_integral_e1_series(x, cfg)
                                : upper_gamma_by_series(s, x, cfg);
  // Gamma(s-1, x) = (Gamma(s, x) - x^{s-1} e^{-x}) / (s - 1)
  while (s > r) {
    s -= 1.0;
    value = (value - std::exp(s * std::log(x) - x)) / s;
  }
  return value;
}

}  // namespace prodnorm::specfun
