#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "prodnorm/error.hpp"
#include "prodnorm/exact.hpp"
#include "prodnorm/quadrature.hpp"

namespace prodnorm::exact {

namespace {

constexpr int kMaxPanels = 64;
constexpr double kNegligibleMass = 1e-22;

quad::Options panel_options(const EvalConfig& cfg) {
  quad::Options opt;
  opt.rel_tol = std::min(cfg.quad_rel_tol, 1e-12);
  return opt;
}

// The n = 1 density has a logarithmic singularity at the origin; y = w e^{-u}
// turns [0, w] into a smooth, exponentially decaying integral. The part
// beyond u = 64 carries under 1e-25 of the panel mass.
template <class F>
quad::Result first_panel(const F& f, double w, const quad::Options& opt) {
  auto g = [&](double u) {
    const double y = w * std::exp(-u);
    return f(y) * y;
  };
  quad::Result total{};
  quad::Options piece = opt;
  double a = 0.0;
  for (double b : {2.0, 8.0, 24.0, 64.0}) {
    const auto r = quad::integrate(g, a, b, piece);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
    piece.abs_tol = std::max(opt.abs_tol, opt.rel_tol * total.value);
    a = b;
  }
  return total;
}

}  // namespace

Distribution::Distribution(const DistParams& params, const EvalConfig& cfg)
    : params_(params), mirrored_(reflect(params)), cfg_(cfg) {
  params_.validate();
  cfg_.validate();
}

double Distribution::pdf(double x) const { return exact::pdf(params_, x, cfg_); }

double Distribution::side_pdf(bool upper, double y) const {
  return exact::pdf(upper ? params_ : mirrored_, y, cfg_);
}

const Distribution::Side& Distribution::side(bool upper) const {
  auto& slot = upper ? upper_ : lower_;
  if (slot) return *slot;

  auto s = std::make_unique<Side>();
  const double w = params_.sigma_x * params_.sigma_y;
  const auto opt = panel_options(cfg_);
  auto f = [&](double y) { return side_pdf(upper, y); };
  s->edges.push_back(0.0);
  double right = w;
  for (int k = 0; k < kMaxPanels; ++k) {
    const double left = s->edges.back();
    const auto r = k == 0 && params_.n == 1 ? first_panel(f, w, opt) : quad::integrate(f, left, right, opt);
    if (!r.converged) fail(ErrorKind::nonconvergence, "tail: panel quadrature did not converge");
    s->edges.push_back(right);
    s->masses.push_back(r.value);
    const bool shrinking = k > 0 && r.value < s->masses[k - 1];
    if (k >= 3 && shrinking && r.value <= kNegligibleMass) break;
    right *= 2.0;
  }
  s->beyond.assign(s->masses.size() + 1, 0.0);
  for (std::size_t i = s->masses.size(); i-- > 0;) s->beyond[i] = s->beyond[i + 1] + s->masses[i];
  slot = std::move(s);
  return *slot;
}

double Distribution::side_tail(bool upper, double y) const {
  const Side& s = side(upper);
  auto f = [&](double t) { return side_pdf(upper, t); };
  const auto opt = panel_options(cfg_);
  if (y >= s.edges.back()) {
    const auto r = quad::integrate_to_infinity(f, y, s.edges.back() - s.edges[s.edges.size() - 2], opt);
    return r.value;
  }
  const auto it = std::upper_bound(s.edges.begin(), s.edges.end(), y);
  const std::size_t i = static_cast<std::size_t>(it - s.edges.begin()) - 1;
  const auto r = quad::integrate(f, y, s.edges[i + 1], opt);
  if (!r.converged) fail(ErrorKind::nonconvergence, "tail: quadrature did not converge");
  return r.value + s.beyond[i + 1];
}

double Distribution::tail(double x) const {
  if (std::isnan(x)) fail(ErrorKind::domain, "tail: x is NaN");
  if (x >= 0.0) return side_tail(true, x);
  return 1.0 - side_tail(false, -x);
}

double Distribution::cdf(double x) const {
  if (std::isnan(x)) fail(ErrorKind::domain, "cdf: x is NaN");
  if (x < 0.0) return side_tail(false, -x);
  return 1.0 - side_tail(true, x);
}

double Distribution::total_mass() const { return side(true).beyond[0] + side(false).beyond[0]; }

// Finds y >= 0 with side_tail(upper, y) = target. The cached panel masses
// bracket the root; inside the panel a Newton step on the partial integral
// is accepted when it stays inside the bracket, otherwise we bisect.
double Distribution::solve_side(bool upper, double target) const {
  const Side& s = side(upper);
  if (target >= s.beyond[0]) return 0.0;
  if (target < s.beyond[s.masses.size() - 1])
    fail(ErrorKind::nonconvergence, "quantile: probability too extreme to bracket");
  std::size_t i = 0;
  while (s.beyond[i + 1] > target) ++i;

  const double a = s.edges[i], b = s.edges[i + 1];
  const double rest = s.beyond[i + 1];
  const auto opt = panel_options(cfg_);
  auto f = [&](double t) { return side_pdf(upper, t); };
  auto excess = [&](double y) {
    const auto r = quad::integrate(f, y, b, opt);
    return r.value + rest - target;
  };

  double lo = a, hi = b;
  double y = a + (b - a) * (s.beyond[i] - target) / s.masses[i];
  const double tol = std::max(1e-13 * target, 1e-300);
  for (int it = 0; it < 200; ++it) {
    const double g = excess(y);
    if (std::abs(g) <= tol) return y;
    (g > 0.0 ? lo : hi) = y;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) break;
    double next = 0.5 * (lo + hi);
    if (y > 0.0) {
      const double density = f(y);
      if (density > 0.0 && std::isfinite(density)) {
        const double newton = y + g / density;
        if (newton > lo && newton < hi) next = newton;
      }
    }
    y = next;
  }
  const double g = excess(y);
  if (std::abs(g) > 1e-9)
    fail(ErrorKind::nonconvergence, "quantile: root finding did not reach tolerance");
  return y;
}

double Distribution::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::domain, "quantile: p must lie in (0, 1)");
  const double below_zero = side(false).beyond[0];
  if (p > below_zero) return solve_side(true, 1.0 - p);
  return -solve_side(false, p);
}

double tail(const DistParams& params, double x, const EvalConfig& cfg) {
  cfg.validate();
  if (std::isnan(x)) fail(ErrorKind::domain, "tail: x is NaN");
  const bool upper = x >= 0.0;
  const DistParams& side = upper ? params : reflect(params);
  const double start = upper ? x : -x;
  auto f = [&](double y) { return exact::pdf(side, y, cfg); };
  quad::Options opt;
  opt.rel_tol = std::min(cfg.quad_rel_tol, 1e-12);
  const auto r = quad::integrate_to_infinity(f, start, params.sigma_x * params.sigma_y, opt);
  if (!r.converged) fail(ErrorKind::nonconvergence, "tail: quadrature did not converge");
  return upper ? r.value : 1.0 - r.value;
}

double cdf(const DistParams& params, double x, const EvalConfig& cfg) {
  if (std::isnan(x)) fail(ErrorKind::domain, "cdf: x is NaN");
  if (x < 0.0) {
    // Direct lower-tail integral keeps small probabilities accurate.
    cfg.validate();
    const DistParams mirrored = reflect(params);
    auto f = [&](double y) { return exact::pdf(mirrored, y, cfg); };
    quad::Options opt;
    opt.rel_tol = std::min(cfg.quad_rel_tol, 1e-12);
    const auto r = quad::integrate_to_infinity(f, -x, params.sigma_x * params.sigma_y, opt);
    if (!r.converged) fail(ErrorKind::nonconvergence, "cdf: quadrature did not converge");
    return r.value;
  }
  return 1.0 - tail(params, x, cfg);
}

double quantile_numeric(const DistParams& params, double p, const EvalConfig& cfg) {
  return Distribution(params, cfg).quantile(p);
}

}  // namespace prodnorm::exact
