#include "prodnorm/lemmas.hpp"

#include <cmath>

#include "prodnorm/error.hpp"
#include "prodnorm/quadrature.hpp"
#include "prodnorm/specfun.hpp"

namespace prodnorm::asym {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxExpansionOrder)
    fail(ErrorKind::parameter, "expansion order must lie in [0, 40]");
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

std::vector<double> lemma1_U(const std::vector<double>& u, double a, double b, double m, int order) {
  check_order(order);
  if (!(a > 0.0)) fail(ErrorKind::parameter, "lemma1_U: a must be positive");
  const double half_ratio = b / (2.0 * a);
  std::vector<double> out(order + 1, 0.0);
  for (int p = 0; p <= order; ++p) {
    double acc = 0.0;
    for (int l = 0; l <= p && l < static_cast<int>(u.size()); ++l) {
      if (u[l] == 0.0) continue;
      for (int k = 0; l + k <= p; ++k) {
        const double bk = specfun::gen_binom(2.0 * m + 1.0 - l, k);
        for (int j = 0; l + k + 2 * j <= p; ++j) {
          const int i = p - l - k - 2 * j;
          const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
          acc += sign * u[l] * bk * specfun::gen_binom(2.0 * m - l - k - 2 * j, i) *
                 specfun::pochhammer(0.5 * (l + k) - m, j) / ipow(a, j) * ipow(half_ratio, k + i);
        }
      }
    }
    out[p] = acc;
  }
  return out;
}

std::vector<double> lemma1_V(const std::vector<double>& v, double a, double m, int order,
                             Transcription form) {
  check_order(order);
  if (!(a > 0.0)) fail(ErrorKind::parameter, "lemma1_V: a must be positive");
  std::vector<double> out(order + 1, 0.0);
  for (int k = 0; k <= order; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k && j < static_cast<int>(v.size()); ++j) {
      const double start = form == Transcription::corrected ? j - m : k - m;
      acc += v[j] * specfun::pochhammer(start, k - j) / ipow(-a, k - j);
    }
    out[k] = acc;
  }
  return out;
}

CoefficientSet lemma1_coeffs(const std::vector<double>& u, double a, double b, double m, int order,
                             Transcription form) {
  CoefficientSet set;
  set.order = order;
  if (b != 0.0) {
    set.kind = CoefficientKind::lemma1_U;
    set.values = lemma1_U(u, a, b, m, order);
  } else {
    set.kind = CoefficientKind::lemma1_V;
    set.values = lemma1_V(u, a, m, order, form);
  }
  return set;
}

double tail_kernel_scaled(double a, double b, double q, double x) {
  if (!(a > 0.0) || !(x > 0.0)) fail(ErrorKind::domain, "tail_kernel_scaled: need a > 0 and x > 0");
  const double sx = std::sqrt(x);
  // t = x + v; sqrt(x+v) - sqrt(x) = v / (sqrt(x+v) + sqrt(x)) avoids cancellation.
  auto f = [&](double v) {
    const double root_gap = v / (std::sqrt(x + v) + sx);
    return std::exp(q * std::log1p(v / x) - a * v + b * root_gap);
  };
  quad::Options opt;
  opt.rel_tol = 1e-13;
  const auto r = quad::integrate_to_infinity(f, 0.0, 1.0 / a, opt);
  if (!r.converged) fail(ErrorKind::nonconvergence, "tail_kernel_scaled: quadrature did not converge");
  return r.value;
}

void AsymptoticInversionProblem::validate() const {
  if (!(a > 0.0)) fail(ErrorKind::parameter, "inversion: a must be positive");
  if (!(A > 0.0)) fail(ErrorKind::parameter, "inversion: A must be positive");
  if (!(z > 0.0 && z < A)) fail(ErrorKind::parameter, "inversion: need 0 < z < A");
  if (!std::isfinite(b) || !std::isfinite(m)) fail(ErrorKind::parameter, "inversion: b and m must be finite");
}

double asym_invert_log(double a, double b, double m, double log_A, double log_inv_z,
                       Transcription form) {
  const double L = log_inv_z;
  const double lnL = std::log(L);
  const double sqL = std::sqrt(L);
  const double a32 = a * std::sqrt(a);
  const double shift = form == Transcription::corrected ? 0.5 : 0.25;
  return L / a + b / a32 * sqL + m / a * lnL + shift * b * b / (a * a) +
         (log_A - m * std::log(a)) / a + b * m / (2.0 * a32) * lnL / sqL;
}

double asym_invert(const AsymptoticInversionProblem& problem, Transcription form) {
  problem.validate();
  const double L = -std::log(problem.z);
  if (!(L > 1.0)) fail(ErrorKind::regime, "asym_invert: ln(1/z) must exceed 1");
  return asym_invert_log(problem.a, problem.b, problem.m, std::log(problem.A), L, form);
}

}  // namespace prodnorm::asym
