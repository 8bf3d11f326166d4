#include "prodnorm/coefficients.hpp"

#include <cmath>
#include <limits>

#include "prodnorm/error.hpp"
#include "prodnorm/lemmas.hpp"
#include "prodnorm/puiseux.hpp"
#include "prodnorm/specfun.hpp"

namespace prodnorm::asym {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxExpansionOrder)
    fail(ErrorKind::parameter, "expansion order must lie in [0, 40]");
}

double sum_ratio(const DerivedParams& dp) { return std::abs(dp.r_x + dp.r_y); }

void require_nonzero_sum(const DerivedParams& dp, const char* who) {
  if (sum_ratio(dp) == 0.0)
    fail(ErrorKind::parameter, std::string(who) + ": requires r_x + r_y != 0");
}

// e^{-z} M(h + i, h, z) = sum_j C(i, j) z^j / (h)_j, a polynomial because the
// parameters differ by an integer.
double scaled_kummer(int i, double h, double z) {
  double term = 1.0, acc = 1.0;
  for (int j = 1; j <= i; ++j) {
    term *= static_cast<double>(i - j + 1) / j * z / (h + j - 1);
    acc += term;
  }
  return acc;
}

CoefficientSet make_set(CoefficientKind kind, int order, const DerivedParams& dp) {
  CoefficientSet set;
  set.kind = kind;
  set.order = order;
  set.params = dp;
  set.values.assign(order + 1, 0.0);
  return set;
}

}  // namespace

CoefficientSet coeff_c(const DerivedParams& dp, int order) {
  check_order(order);
  require_nonzero_sum(dp, "coeff_c");
  const double n = dp.n;
  const double rho = dp.rho;
  const double r = sum_ratio(dp);
  const double d = dp.r_x - dp.r_y;
  const double z8 = n / 8.0 * (1.0 + rho) / (1.0 - rho) * d * d;
  const double b = r * std::sqrt(n) / (1.0 + rho);
  const double w = 0.5 * (1.0 - rho * rho);

  // Only the bracket sum over i depends on j; the r = l - j prefactor and
  // the Puiseux table only on the shift r.
  std::vector<double> inner_weight(order + 1);
  for (int i = 0; i <= order; ++i)
    inner_weight[i] = specfun::pochhammer(0.5 * n, i) * std::pow(w, i) * scaled_kummer(i, 0.5 * n, z8);

  std::vector<PuiseuxTable> tables;
  std::vector<double> shift_pre;
  for (int s = 0; s <= order; ++s) {
    tables.push_back(puiseux_g((n - 3.0) / 4.0 - 0.5 * s, b, order - s));
    shift_pre.push_back(specfun::pochhammer((3.0 - n) / 2.0, s) *
                        specfun::pochhammer((n - 1.0) / 2.0, s) /
                        (std::tgamma(s + 1.0) * std::pow(2.0, s) * std::pow(n, 0.5 * s)) *
                        std::pow((1.0 + rho) / r, s));
  }

  auto set = make_set(CoefficientKind::c, order, dp);
  set.values[0] = 1.0;
  for (int l = 1; l <= order; ++l) {
    double acc = 0.0;
    for (int j = 0; j <= l; ++j) {
      const PuiseuxTable& g = tables[l - j];
      double inner = 0.0;
      for (int i = (j + 1) / 2; i <= j; ++i) inner += inner_weight[i] * g.at(i, j);
      acc += shift_pre[l - j] * inner;
    }
    set.values[l] = acc;
  }
  return set;
}

CoefficientSet coeff_d(const DerivedParams& dp, int order, DRepresentation rep) {
  check_order(order);
  const double h = 0.5 * dp.n;
  const double rho = dp.rho;
  const double ratio = (1.0 + rho) / (1.0 - rho);
  const double w = 0.5 * (1.0 - rho * rho);
  auto set = make_set(CoefficientKind::d, order, dp);
  for (int k = 0; k <= order; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const double pre = sign * specfun::pochhammer(1.0 - h, k) * specfun::pochhammer(h, k) /
                       std::tgamma(k + 1.0) * std::pow(w, k);
    if (pre == 0.0) continue;  // (1 - n/2)_k vanishes for even n and k >= n/2
    double body = 0.0;
    if (rep == DRepresentation::finite_sum) {
      for (int j = 0; j <= k; ++j)
        body += std::pow(h, j) / specfun::pochhammer(h, j) * std::tgamma(k + 1.0) /
                (std::tgamma(j + 1.0) * std::tgamma(k - j + 1.0)) * std::pow(ratio * dp.r_x * dp.r_x, j);
    } else {
      const double arg = h * ratio * dp.r_x * dp.r_x;
      body = std::exp(-arg) * specfun::detail::kummer_m_series(h + k, h, arg, specfun::SpecFunConfig{});
    }
    set.values[k] = pre * body;
  }
  return set;
}

CoefficientSet coeff_gamma(const DerivedParams& dp, int order) {
  check_order(order);
  require_nonzero_sum(dp, "coeff_gamma");
  const auto c = coeff_c(dp, order);
  const double n = dp.n;
  const double a = 1.0 / (1.0 + dp.rho);
  const double b = sum_ratio(dp) * std::sqrt(n) / (1.0 + dp.rho);
  auto set = make_set(CoefficientKind::gamma, order, dp);
  set.values = lemma1_U(c.values, a, b, (n - 3.0) / 4.0, order);
  return set;
}

CoefficientSet coeff_delta(const DerivedParams& dp, int order, Transcription form) {
  check_order(order);
  const auto d = coeff_d(dp, order);
  auto set = make_set(CoefficientKind::delta, order, dp);
  set.values = lemma1_V(d.values, 1.0 / (1.0 + dp.rho), 0.5 * dp.n - 1.0, order, form);
  return set;
}

LowOrderCoefficients explicit_low_order(const DerivedParams& dp) {
  const double n = dp.n;
  const double rho = dp.rho;
  const double rx = dp.r_x;
  const double sum = dp.r_x + dp.r_y;
  const double diff = dp.r_x - dp.r_y;
  const double ratio = (1.0 + rho) / (1.0 - rho);
  const double om = 1.0 - rho * rho;

  LowOrderCoefficients out{};
  const double rx_brace = 1.0 + ratio * rx * rx;
  out.d1 = n * (n - 2.0) * om / 8.0 * rx_brace;
  out.d2 = (n + 2.0) * n * (n - 2.0) * (n - 4.0) * om * om / 128.0 *
           (1.0 + 2.0 * ratio * rx * rx + n / (n + 2.0) * ratio * ratio * rx * rx * rx * rx);
  out.delta1 = (n - 4.0) * (1.0 + rho) / 2.0 + out.d1;
  out.delta2 = (n - 6.0) * (n - 8.0) * (1.0 + rho) * (1.0 + rho) / 4.0 +
               n * (n - 2.0) * (n - 6.0) * (1.0 + rho) * om / 16.0 * rx_brace + out.d2;

  if (sum == 0.0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.c1 = out.c2 = out.gamma1 = out.gamma2 = nan;
    return out;
  }
  const double as = std::abs(sum);
  const double quarter = 1.0 + 0.25 * ratio * diff * diff;
  out.c1 = std::pow(n, 1.5) / 8.0 * as * (1.0 - rho) * quarter -
           (n - 1.0) * (n - 3.0) / (8.0 * std::sqrt(n)) * (1.0 + rho) / as;
  out.c2 = n * n * (n + 2.0) * om * om / 128.0 * sum * sum / ((1.0 + rho) * (1.0 + rho)) *
               (1.0 + 0.5 * ratio * diff * diff +
                n / (16.0 * (n + 2.0)) * ratio * ratio * diff * diff * diff * diff) +
           n * (n - 3.0) * om / 16.0 * quarter - n * (n - 1.0) * (n - 3.0) * om / 64.0 * quarter +
           (n + 1.0) * (n - 1.0) * (n - 3.0) * (n - 5.0) / (128.0 * n) *
               ((1.0 + rho) / sum) * ((1.0 + rho) / sum);
  out.gamma1 = out.c1 + 0.5 * std::sqrt(n) * as;
  out.gamma2 = out.c2 + 0.5 * out.c1 * std::sqrt(n) * as + (n - 3.0) * (1.0 + rho) / 4.0 +
               n * sum * sum / 4.0;
  return out;
}

}  // namespace prodnorm::asym
