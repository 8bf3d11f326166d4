#pragma once

// Exact density of S_n and numerically exact tail, CDF and quantile.
//
// Three independent density representations are provided: a double series
// in Tricomi U functions (general n), the Bessel-K double series for n = 1,
// and one-dimensional integrals over products of Bessel I functions. The
// `pdf` dispatcher uses the U series and falls back to the integral form
// when the series needs more than `series_k_max` diagonals.
//
// Negative arguments are always evaluated through `reflect`, so every code
// path works with x > 0.

#include <memory>
#include <vector>

#include "prodnorm/params.hpp"
#include "prodnorm/specfun.hpp"

namespace prodnorm::exact {

struct EvalConfig {
  int series_k_max = 50;
  double quad_rel_tol = 1e-10;
  double quad_abs_tol = 1e-300;
  /// Integration stops once the integrand has fallen by exp(-tail_cut)
  /// below its peak.
  double tail_cut = 60.0;
  specfun::SpecFunConfig specfun{};

  void validate() const;
};

/// Quantities of the integral representations at a point x.
struct ExactPdfWorkspace {
  int sgn_x = 0;
  double prefactor_d1 = 0.0;  ///< |r_x| != |r_y|
  double prefactor_d2 = 0.0;  ///< r_x = r_y != 0
  double prefactor_d3 = 0.0;  ///< r_x = -r_y != 0

  /// Order shift of the U-series terms: k - j for x >= 0, j for x < 0.
  int index_shift(int j, int k) const { return sgn_x >= 0 ? k - j : j; }
};

/// Prefactors at x for the given parameters, without reflection. They are
/// only meaningful for x > 0 and are left at zero when undefined.
ExactPdfWorkspace make_workspace(const DistParams& params, double x);

double pdf_series(const DistParams& params, double x, const EvalConfig& cfg = {});
double pdf_cui(const DistParams& params, double x, const EvalConfig& cfg = {});
double pdf_integral(const DistParams& params, double x, const EvalConfig& cfg = {});
double pdf(const DistParams& params, double x, const EvalConfig& cfg = {});

/// Tail, CDF and quantile of one parameter set. Masses of dyadic panels on
/// each side of the origin are computed once and cached, so repeated tail
/// and quantile queries cost one partial-panel integral each.
class Distribution {
 public:
  explicit Distribution(const DistParams& params, const EvalConfig& cfg = {});

  const DistParams& params() const { return params_; }
  double pdf(double x) const;
  double tail(double x) const;  ///< P(S_n > x)
  double cdf(double x) const;   ///< P(S_n <= x)
  double quantile(double p) const;

  /// Total mass of the cached panels; one up to quadrature error.
  double total_mass() const;

 private:
  struct Side {
    std::vector<double> edges;   // 0 = e_0 < e_1 < ...
    std::vector<double> masses;  // mass of [e_i, e_{i+1}]
    std::vector<double> beyond;  // mass of [e_i, inf)
  };

  const Side& side(bool upper) const;
  double side_pdf(bool upper, double y) const;
  double side_tail(bool upper, double y) const;  // mass of [y, inf) on one side
  double solve_side(bool upper, double target) const;

  DistParams params_;
  DistParams mirrored_;
  EvalConfig cfg_;
  mutable std::unique_ptr<Side> upper_, lower_;
};

double tail(const DistParams& params, double x, const EvalConfig& cfg = {});
double cdf(const DistParams& params, double x, const EvalConfig& cfg = {});
double quantile_numeric(const DistParams& params, double p, const EvalConfig& cfg = {});

}  // namespace prodnorm::exact
