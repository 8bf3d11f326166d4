#include "prodnorm/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "prodnorm/error.hpp"
#include "prodnorm/quadrature.hpp"

namespace prodnorm::exact {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_c_n(const DerivedParams& dp) {
  const double q = dp.r_x * dp.r_x + dp.r_y * dp.r_y - 2.0 * dp.rho * dp.r_x * dp.r_y;
  return -dp.n * q / (2.0 * (1.0 - dp.rho * dp.rho));
}

double lbinom(int m, int i) {
  return std::lgamma(m + 1.0) - std::lgamma(i + 1.0) - std::lgamma(m - i + 1.0);
}

double log_or_neg_inf(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

// Sums positive terms given by their logarithms, one diagonal k at a time,
// relative to the log of the first term. Stops once a diagonal contributes
// at most `tol` of the running total three times in a row.
class DiagonalSum {
 public:
  explicit DiagonalSum(double tol) : tol_(tol) {}

  void add_diagonal(const std::vector<double>& log_terms) {
    double diag = 0.0;
    for (double lt : log_terms) {
      if (lt == kNegInf) continue;
      if (!have_ref_) {
        ref_ = lt;
        have_ref_ = true;
      }
      diag += std::exp(lt - ref_);
    }
    sum_ += diag;
    quiet_ = (diag <= tol_ * sum_) ? quiet_ + 1 : 0;
  }
  bool converged() const { return quiet_ >= 3 && have_ref_; }
  double log_value() const { return have_ref_ ? ref_ + std::log(sum_) : kNegInf; }

 private:
  double tol_;
  double ref_ = 0.0;
  bool have_ref_ = false;
  double sum_ = 0.0;
  int quiet_ = 0;
};

// Density for r_x = r_y = 0 and x > 0, in terms of K_{(n-1)/2}.
double closed_form(const DerivedParams& dp, double x, const EvalConfig& cfg) {
  const double nu = 0.5 * (dp.n - 1);
  const double one_m = 1.0 - dp.rho * dp.rho;
  const double z = x / (dp.s * one_m);
  const double log_f = nu * std::log(x) - nu * kLn2 - 0.5 * (dp.n + 1) * std::log(dp.s) -
                       0.5 * std::log(std::numbers::pi * one_m) - std::lgamma(0.5 * dp.n) -
                       x / (dp.s * (1.0 + dp.rho)) +
                       std::log(specfun::bessel_k_scaled(nu, z, cfg.specfun));
  return std::exp(log_f);
}

struct SeriesShape {
  double log_na8;  // log(n A / 8), -inf when A = 0
  double log_nb8;  // log(n B / 8), -inf when B = 0
  double log_pre;  // log of the x-independent prefactor
};

SeriesShape series_shape(const DerivedParams& dp) {
  const double n = dp.n;
  const double ratio = (1.0 + dp.rho) / (1.0 - dp.rho);
  const double diff = dp.r_x - dp.r_y;
  const double sum = dp.r_x + dp.r_y;
  SeriesShape sh;
  sh.log_na8 = log_or_neg_inf(n * ratio * diff * diff / 8.0);
  sh.log_nb8 = log_or_neg_inf(n * sum * sum / (8.0 * ratio));
  sh.log_pre = (0.5 * n - 1.0) * std::log(1.0 - dp.rho * dp.rho) + log_c_n(dp) -
               (n - 1.0) * kLn2 - std::log(dp.s);
  return sh;
}

// Limit of the U series at x = 0, finite for n >= 2.
double series_at_zero(const DerivedParams& dp, const EvalConfig& cfg) {
  const double h = 0.5 * dp.n;
  const auto sh = series_shape(dp);
  DiagonalSum total(cfg.quad_rel_tol);
  std::vector<double> diag;
  for (int k = 0; k <= cfg.series_k_max; ++k) {
    diag.clear();
    for (int j = 0; j <= k; ++j) {
      const int m = k - j;
      if ((j > 0 && sh.log_na8 == kNegInf) || (m > 0 && sh.log_nb8 == kNegInf)) continue;
      const double lj = j > 0 ? j * sh.log_na8 : 0.0;
      const double lm = m > 0 ? m * sh.log_nb8 : 0.0;
      diag.push_back(lj - std::lgamma(j + 1.0) + lm - std::lgamma(m + 1.0) +
                     std::lgamma(dp.n + k - 1.0) - std::lgamma(h + m) - std::lgamma(h + j));
    }
    total.add_diagonal(diag);
    if (total.converged()) return std::exp(sh.log_pre + total.log_value());
  }
  fail(ErrorKind::nonconvergence, "pdf_series: series at x = 0 did not converge");
}

// U series for x > 0. With D_p = X^{n/2+p} U(n/2+p, n+p, X), the (j, m = k-j)
// term is
//   P X^{n/2-1} (nA/8)^j/j! (nB/8)^m/(m! Gamma(n/2+m))
//     * sum_i C(m,i) (n/2+j)_i X^{m-i} D_{j+i},
// which follows from Kummer's transformation and the binomial expansion of
// (1+t)^m inside the Euler integral. All terms are positive.
constexpr double kRecurrenceMaxX = 16.0;

double double_series(const DerivedParams& dp, double x, const EvalConfig& cfg) {
  const double h = 0.5 * dp.n;
  const double big_x = 2.0 * x / (dp.s * (1.0 - dp.rho * dp.rho));
  const double log_x = std::log(big_x);
  const auto sh = series_shape(dp);
  const double log_p = sh.log_pre - x / (dp.s * (1.0 + dp.rho)) + (h - 1.0) * log_x;

  // log D_p, filled on demand. For moderate X the contiguous relations
  //   D_{p+1} = D_p + (h-1) W_p / X,  W_{p+1} = X (D_{p+1} - W_p) / (h+p+1),
  // with W_p = X^{h+p+1} U(h+p+1, n+p, X), are stable in the forward
  // direction and replace one quadrature per term.
  std::vector<double> log_d;
  const bool recur = big_x <= kRecurrenceMaxX;
  double d_cur = 0.0, w_cur = 0.0;
  if (recur) {
    d_cur = specfun::tricomi_u_scaled(h, dp.n, big_x, cfg.specfun);
    w_cur = specfun::tricomi_u_scaled(h + 1.0, dp.n, big_x, cfg.specfun);
  }
  auto log_dp = [&](int p) {
    while (static_cast<int>(log_d.size()) <= p) {
      const double q = static_cast<double>(log_d.size());
      if (!recur) {
        log_d.push_back(std::log(specfun::tricomi_u_scaled(h + q, dp.n + q, big_x, cfg.specfun)));
        continue;
      }
      log_d.push_back(std::log(d_cur));
      const double d_next = d_cur + (h - 1.0) * w_cur / big_x;
      w_cur = big_x * (d_next - w_cur) / (h + q + 1.0);
      d_cur = d_next;
    }
    return log_d[p];
  };

  DiagonalSum total(cfg.quad_rel_tol);
  std::vector<double> diag, inner;
  for (int k = 0; k <= cfg.series_k_max; ++k) {
    diag.clear();
    for (int j = 0; j <= k; ++j) {
      const int m = k - j;
      if ((j > 0 && sh.log_na8 == kNegInf) || (m > 0 && sh.log_nb8 == kNegInf)) continue;
      inner.clear();
      double peak = kNegInf;
      const double lg_hj = std::lgamma(h + j);
      for (int i = 0; i <= m; ++i) {
        const double lt = lbinom(m, i) + std::lgamma(h + j + i) - lg_hj + (m - i) * log_x +
                          log_dp(j + i);
        inner.push_back(lt);
        peak = std::max(peak, lt);
      }
      double acc = 0.0;
      for (double lt : inner) acc += std::exp(lt - peak);
      const double lj = j > 0 ? j * sh.log_na8 : 0.0;
      const double lm = m > 0 ? m * sh.log_nb8 : 0.0;
      diag.push_back(lj - std::lgamma(j + 1.0) + lm - std::lgamma(m + 1.0) - std::lgamma(h + m) +
                     peak + std::log(acc));
    }
    total.add_diagonal(diag);
    if (total.converged()) return std::exp(log_p + total.log_value());
  }
  fail(ErrorKind::nonconvergence,
       "pdf_series: series not converged within series_k_max diagonals");
}

enum class IntegralCase { general, equal, opposite };

// Logarithms of D_1, D_2, D_3 at x > 0; -inf where a representation does
// not apply.
struct LogPrefactors {
  double d1 = kNegInf, d2 = kNegInf, d3 = kNegInf;
};

LogPrefactors log_prefactors(const DerivedParams& dp, double x) {
  LogPrefactors out;
  const double n = dp.n;
  const double rho = dp.rho;
  const double xs = x / dp.s;
  const double decay = -x / (dp.s * (1.0 + rho));
  const double d2 = dp.r_x * dp.r_x - dp.r_y * dp.r_y;
  if (d2 != 0.0) {
    out.d1 = log_c_n(dp) - std::log(dp.s * (1.0 - rho * rho)) +
             (1.0 - 0.5 * n) * std::log(0.25 * n * std::abs(d2)) + 0.5 * n * std::log(xs) + decay;
  }
  if (dp.r_x != 0.0) {
    const double common = 0.25 * (2.0 - n) * std::log(n) +
                          (1.0 - 0.5 * n) * std::log(std::abs(dp.r_x)) - std::log(dp.s) -
                          std::lgamma(0.5 * n) + 0.25 * (3.0 * n - 2.0) * std::log(xs) + decay;
    const double r2 = dp.r_x * dp.r_x;
    if (dp.r_x == dp.r_y)
      out.d2 = common - 0.5 * n * std::log1p(-rho) - std::log1p(rho) - n * r2 / (1.0 + rho);
    if (dp.r_x == -dp.r_y)
      out.d3 = common - 0.5 * n * std::log1p(rho) - std::log1p(-rho) - n * r2 / (1.0 - rho);
  }
  return out;
}

}  // namespace

void EvalConfig::validate() const {
  if (series_k_max < 1) fail(ErrorKind::parameter, "series_k_max must be positive");
  if (!(quad_rel_tol > 0.0)) fail(ErrorKind::parameter, "quad_rel_tol must be positive");
  if (!(quad_abs_tol > 0.0)) fail(ErrorKind::parameter, "quad_abs_tol must be positive");
  if (!(tail_cut > 0.0)) fail(ErrorKind::parameter, "tail_cut must be positive");
  specfun.validate();
}

ExactPdfWorkspace make_workspace(const DistParams& params, double x) {
  ExactPdfWorkspace ws;
  ws.sgn_x = (x > 0.0) - (x < 0.0);
  if (!(x > 0.0)) return ws;
  const auto lp = log_prefactors(derive(params), x);
  ws.prefactor_d1 = std::exp(lp.d1);
  ws.prefactor_d2 = std::exp(lp.d2);
  ws.prefactor_d3 = std::exp(lp.d3);
  return ws;
}

double pdf_series(const DistParams& params, double x, const EvalConfig& cfg) {
  cfg.validate();
  if (std::isnan(x)) fail(ErrorKind::domain, "pdf_series: x is NaN");
  if (x < 0.0) return pdf_series(reflect(params), -x, cfg);
  const auto dp = derive(params);
  if (x == 0.0) {
    if (dp.n == 1) fail(ErrorKind::singular, "density of a single product is unbounded at 0");
    return series_at_zero(dp, cfg);
  }
  if (!std::isfinite(x)) return 0.0;
  if (dp.r_x == 0.0 && dp.r_y == 0.0) return closed_form(dp, x, cfg);
  return double_series(dp, x, cfg);
}

double pdf_cui(const DistParams& params, double x, const EvalConfig& cfg) {
  cfg.validate();
  const auto dp = derive(params);
  if (dp.n != 1) fail(ErrorKind::parameter, "pdf_cui: only defined for n = 1");
  if (x == 0.0) fail(ErrorKind::singular, "density of a single product is unbounded at 0");
  if (!std::isfinite(x)) fail(ErrorKind::domain, "pdf_cui: x must be finite");

  // The inner sum alternates in sign whenever sgn(x) a b < 0 and cancels
  // heavily at large |x|, so it is accumulated in extended precision.
  using ld = long double;
  const ld rho = dp.rho;
  const ld one_m = 1.0L - rho * rho;
  const ld ax = std::abs(x);
  const ld z = ax / (dp.s * one_m);
  const double sgn = x > 0.0 ? 1.0 : -1.0;
  const ld a = dp.r_x - rho * dp.r_y;
  const ld b = dp.r_y - rho * dp.r_x;
  const ld la = a != 0.0L ? std::log(std::abs(a)) : -std::numeric_limits<ld>::infinity();
  const ld lb = b != 0.0L ? std::log(std::abs(b)) : -std::numeric_limits<ld>::infinity();

  // exp(z) K_v(z) for v = 0, 1, ... by upward recurrence.
  std::vector<ld> kz{specfun::bessel_k_scaled(0.0, static_cast<double>(z), cfg.specfun),
                     specfun::bessel_k_scaled(1.0, static_cast<double>(z), cfg.specfun)};
  auto k_scaled = [&](int v) {
    while (static_cast<int>(kz.size()) <= v) {
      const int nu = static_cast<int>(kz.size()) - 1;
      kz.push_back(kz[nu - 1] + 2.0L * nu / z * kz[nu]);
    }
    return kz[v];
  };
  auto lbinoml = [](int m, int i) {
    return std::lgamma(static_cast<ld>(m + 1)) - std::lgamma(static_cast<ld>(i + 1)) -
           std::lgamma(static_cast<ld>(m - i + 1));
  };

  ld sum = 0.0L;
  int quiet = 0;
  const ld lstep = std::log(ax) - std::log(static_cast<ld>(dp.s)) - 2.0L * std::log(one_m);
  for (int k = 0; k <= cfg.series_k_max; ++k) {
    const ld lk = k * lstep - std::lgamma(static_cast<ld>(2 * k + 1));
    ld diag = 0.0L;
    ld diag_abs = 0.0L;
    for (int j = 0; j <= 2 * k; ++j) {
      if ((j > 0 && a == 0.0L) || (2 * k - j > 0 && b == 0.0L)) continue;
      ld sign = 1.0L;
      if (j % 2 == 1 && sgn < 0.0) sign = -sign;
      if (j % 2 == 1 && a < 0.0L) sign = -sign;
      if ((2 * k - j) % 2 == 1 && b < 0.0L) sign = -sign;
      const ld coef = std::exp(lk + lbinoml(2 * k, j) + (j > 0 ? j * la : 0.0L) +
                               (2 * k - j > 0 ? (2 * k - j) * lb : 0.0L));
      const ld v = coef * k_scaled(std::abs(j - k));
      diag += sign * v;
      diag_abs += v;
    }
    sum += diag;
    quiet = (diag_abs <= cfg.quad_rel_tol * std::abs(sum)) ? quiet + 1 : 0;
    if (quiet >= 3) {
      const double log_pre = log_c_n(dp) - std::log(std::numbers::pi * dp.s) -
                             0.5 * std::log(static_cast<double>(one_m)) +
                             static_cast<double>(rho * x / (dp.s * one_m) - z);
      return std::exp(log_pre) * static_cast<double>(sum);
    }
  }
  fail(ErrorKind::nonconvergence, "pdf_cui: series not converged within series_k_max terms");
}

double pdf_integral(const DistParams& params, double x, const EvalConfig& cfg) {
  cfg.validate();
  if (!(x != 0.0) || !std::isfinite(x)) fail(ErrorKind::domain, "pdf_integral: x must be finite and nonzero");
  if (x < 0.0) return pdf_integral(reflect(params), -x, cfg);
  const auto dp = derive(params);
  if (dp.r_x == 0.0 && dp.r_y == 0.0)
    fail(ErrorKind::domain, "pdf_integral: no integral representation for zero means");

  const double n = dp.n;
  const double rho = dp.rho;
  const double nu = 0.5 * n - 1.0;
  const double gam = 2.0 * x / (dp.s * (1.0 - rho * rho));
  const double root = std::sqrt(n * x / dp.s);

  IntegralCase kind = IntegralCase::general;
  if (dp.r_x == dp.r_y) kind = IntegralCase::equal;
  if (dp.r_x == -dp.r_y) kind = IntegralCase::opposite;

  // Integrand after t = u^2:
  //   2u (u^2)^{pu (n-2)/4} (1+u^2)^{p1 (n-2)/4} exp(-gam u^2) I_nu(alpha u) I_nu(beta sqrt(1+u^2))
  double alpha = 0.0, beta = 0.0, pu = 1.0, p1 = 1.0, log_d = 0.0;
  const auto lp = log_prefactors(dp, x);
  switch (kind) {
    case IntegralCase::general:
      alpha = std::abs(dp.r_x - dp.r_y) * root / (1.0 - rho);
      beta = std::abs(dp.r_x + dp.r_y) * root / (1.0 + rho);
      log_d = lp.d1;
      break;
    case IntegralCase::equal:
      beta = 2.0 * std::abs(dp.r_x) * root / (1.0 + rho);
      pu = 2.0;
      log_d = lp.d2;
      break;
    case IntegralCase::opposite:
      alpha = 2.0 * std::abs(dp.r_x) * root / (1.0 - rho);
      p1 = 2.0;
      log_d = lp.d3;
      break;
  }
  const double w = (n - 2.0) / 4.0;
  const auto& sf = cfg.specfun;
  auto log_integrand = [&](double u) {
    const double v = std::sqrt(1.0 + u * u);
    double out = kLn2 + std::log(u) + w * (2.0 * pu * std::log(u) + p1 * std::log1p(u * u)) -
                 gam * u * u;
    if (alpha > 0.0) out += alpha * u + std::log(specfun::bessel_i_scaled(nu, alpha * u, sf));
    if (beta > 0.0) out += beta * v + std::log(specfun::bessel_i_scaled(nu, beta * v, sf));
    return out;
  };

  // Locate the peak of the exponential part, then refine on the full
  // log-integrand by sampling.
  auto dphi = [&](double u) { return -2.0 * gam * u + alpha + beta * u / std::sqrt(1.0 + u * u); };
  double lo = 0.0, hi = (alpha + beta) / (2.0 * gam) + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (dphi(mid) > 0.0 ? lo : hi) = mid;
  }
  const double width = 1.0 / std::sqrt(gam);
  const double span = hi + 12.0 * width;
  double u_peak = span / 128.0;
  double l_peak = log_integrand(u_peak);
  for (int i = 2; i <= 128; ++i) {
    const double u = span * i / 128.0;
    const double l = log_integrand(u);
    if (l > l_peak) {
      l_peak = l;
      u_peak = u;
    }
  }
  double u_end = u_peak + width;
  for (int it = 0; it < 200 && log_integrand(u_end) > l_peak - cfg.tail_cut; ++it) u_end += width * (1 << std::min(it, 20));

  auto f = [&](double u) { return std::exp(log_integrand(u) - l_peak); };
  quad::Options opt;
  opt.rel_tol = cfg.quad_rel_tol;
  const auto head = quad::integrate(f, 0.0, u_peak, opt);
  const auto tail = quad::integrate(f, u_peak, u_end, opt);
  if (!head.converged || !tail.converged)
    fail(ErrorKind::nonconvergence, "pdf_integral: quadrature did not converge");
  return std::exp(log_d + l_peak) * (head.value + tail.value);
}

double pdf(const DistParams& params, double x, const EvalConfig& cfg) {
  try {
    return pdf_series(params, x, cfg);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::nonconvergence) throw;
  }
  return pdf_integral(params, x, cfg);
}

}  // namespace prodnorm::exact
