#include "prodnorm/expansions.hpp"

#include <cmath>
#include <numbers>

#include "prodnorm/error.hpp"
#include "prodnorm/lemmas.hpp"

namespace prodnorm::asym {

namespace {

constexpr double kLogTwoSqrtTwoPi = 1.6120857137646180;  // ln(2 sqrt(2 pi))

void check_side(double x, TailSide side, const char* who) {
  const bool ok = side == TailSide::upper ? x > 0.0 : x < 0.0;
  if (!ok)
    fail(ErrorKind::domain, std::string(who) +
                                (side == TailSide::upper ? ": upper side requires x > 0"
                                                         : ": lower side requires x < 0"));
}

void check_order(int order) {
  if (order < 0 || order > kMaxExpansionOrder)
    fail(ErrorKind::parameter, "expansion order must lie in [0, 40]");
}

double log_c_n(const DerivedParams& dp) {
  const double q = dp.r_x * dp.r_x + dp.r_y * dp.r_y - 2.0 * dp.rho * dp.r_x * dp.r_y;
  return -dp.n * q / (2.0 * (1.0 - dp.rho * dp.rho));
}

// Shared part of the r_x + r_y != 0 prefactors:
// C_n ((1+rho)/(R sqrt n))^{(n-1)/2} e^{z8} / (2 sqrt(2 pi)), in logs.
double log_front(const DerivedParams& dp) {
  const double n = dp.n;
  const double rho = dp.rho;
  const double r = std::abs(dp.r_x + dp.r_y);
  const double d = dp.r_x - dp.r_y;
  const double z8 = n / 8.0 * (1.0 + rho) / (1.0 - rho) * d * d;
  return log_c_n(dp) - kLogTwoSqrtTwoPi + 0.5 * (n - 1.0) * std::log((1.0 + rho) / (r * std::sqrt(n))) + z8;
}

double exponent(const DerivedParams& dp, double x) {
  const double r = std::abs(dp.r_x + dp.r_y);
  return r / (1.0 + dp.rho) * std::sqrt(dp.n * x / dp.s) - x / (dp.s * (1.0 + dp.rho));
}

double half_power_sum(const CoefficientSet& c, double t, int order) {
  // sum_l c_l t^{l/2}, t = s/x
  const double h = std::sqrt(t);
  double acc = 0.0, pw = 1.0;
  for (int l = 0; l <= order; ++l, pw *= h) acc += c[l] * pw;
  return acc;
}

double power_sum(const CoefficientSet& c, double t, int order) {
  double acc = 0.0, pw = 1.0;
  for (int k = 0; k <= order; ++k, pw *= t) acc += c[k] * pw;
  return acc;
}

double pdf_upper(const DistParams& params, double x, int order) {
  const DerivedParams dp = derive(params);
  const double n = dp.n;
  const double t = dp.s / x;
  if (dp.r_x + dp.r_y != 0.0) {
    const double lp = -(n + 1.0) / 4.0 * std::log(dp.s) + log_front(dp) + (n - 3.0) / 4.0 * std::log(x) +
                      exponent(dp, x);
    return std::exp(lp) * half_power_sum(coeff_c(dp, order), t, order);
  }
  const double lp = (0.5 * n - 1.0) * std::log(x) - 0.5 * n * std::log(2.0 * dp.s) - std::lgamma(0.5 * n) -
                    0.5 * n * dp.r_x * dp.r_x - x / (dp.s * (1.0 + dp.rho));
  return std::exp(lp) * power_sum(coeff_d(dp, order), t, order);
}

double tail_upper(const DistParams& params, double x, int order, Transcription delta_form) {
  const DerivedParams dp = derive(params);
  const double n = dp.n;
  const double t = dp.s / x;
  if (dp.r_x + dp.r_y != 0.0) {
    const double lp = std::log1p(dp.rho) + log_front(dp) + (n - 3.0) / 4.0 * std::log(x / dp.s) + exponent(dp, x);
    return std::exp(lp) * half_power_sum(coeff_gamma(dp, order), t, order);
  }
  const double lp = std::log1p(dp.rho) - 0.5 * n * std::numbers::ln2 - std::lgamma(0.5 * n) +
                    (0.5 * n - 1.0) * std::log(x / dp.s) - 0.5 * n * dp.r_x * dp.r_x -
                    x / (dp.s * (1.0 + dp.rho));
  return std::exp(lp) * power_sum(coeff_delta(dp, order, delta_form), t, order);
}

QuantileApprox quantile_upper(const DistParams& params, double q, Transcription form) {
  const DerivedParams dp = derive(params);
  const double n = dp.n;
  const double rho = dp.rho;
  const double L = -std::log(q);
  const double a = 1.0 / (dp.s * (1.0 + rho));
  double b, m, log_a_coef;
  if (dp.r_x + dp.r_y != 0.0) {
    // Leading tail term A x^m e^{-a x + b sqrt x} with m = (n-3)/4.
    b = std::abs(dp.r_x + dp.r_y) * std::sqrt(n / dp.s) / (1.0 + rho);
    m = (n - 3.0) / 4.0;
    log_a_coef = std::log1p(rho) + log_front(dp) - m * std::log(dp.s);
  } else {
    b = 0.0;
    m = 0.5 * n - 1.0;
    log_a_coef = std::log1p(rho) - 0.5 * n * std::numbers::ln2 - std::lgamma(0.5 * n) - m * std::log(dp.s) -
                 0.5 * n * dp.r_x * dp.r_x;
  }
  QuantileApprox out;
  out.value = asym_invert_log(a, b, m, log_a_coef, L, form);
  out.valid = L > 1.0;
  return out;
}

}  // namespace

double pdf_asym(const DistParams& params, double x, TailSide side, int order) {
  check_side(x, side, "pdf_asym");
  check_order(order);
  if (side == TailSide::lower) return pdf_upper(reflect(params), -x, order);
  return pdf_upper(params, x, order);
}

double tail_asym(const DistParams& params, double x, TailSide side, int order, Transcription delta_form) {
  check_side(x, side, "tail_asym");
  check_order(order);
  if (side == TailSide::lower) return tail_upper(reflect(params), -x, order, delta_form);
  return tail_upper(params, x, order, delta_form);
}

QuantileApprox quantile_asym(const DistParams& params, double p, Transcription form) {
  params.validate();
  if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::domain, "quantile_asym: p must lie in (0, 1)");
  if (p >= 0.5) return quantile_upper(params, 1.0 - p, form);
  QuantileApprox mirrored = quantile_upper(reflect(params), p, form);
  mirrored.value = -mirrored.value;
  return mirrored;
}

}  // namespace prodnorm::asym
