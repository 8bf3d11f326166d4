#pragma once

// Truncated large-|x| expansions of the density, tail probabilities and
// quantiles of S_n.
//
// Every lower-side quantity is the upper-side one for the mirrored
// parameters (mu_y, rho) -> (-mu_y, -rho) at -x; the implementation performs
// exactly that substitution, so the two paths agree bit for bit.

#include "prodnorm/coefficients.hpp"
#include "prodnorm/params.hpp"

namespace prodnorm::asym {

enum class TailSide { upper, lower };

/// Density expansion through `order` correction terms. Upper side needs
/// x > 0 and lower side x < 0; otherwise Error(domain).
double pdf_asym(const DistParams& params, double x, TailSide side, int order);

/// Upper side: approximation to P(S_n > x). Lower side: to P(S_n <= x).
/// `delta_form` only matters when the relevant r_x -/+ r_y vanishes.
double tail_asym(const DistParams& params, double x, TailSide side, int order,
                 Transcription delta_form = Transcription::printed);

struct QuantileApprox {
  double value = 0.0;
  /// False when ln(1/q) <= 1 for the tail probability q being inverted;
  /// the formula is then far outside its regime.
  bool valid = false;
};

/// Closed-form quantile approximation. For p >= 1/2 the upper-tail formula
/// is used with q = 1 - p, otherwise its mirror image with q = p.
/// `printed` reproduces the reference constant n R^2 / (4 (1 + rho)),
/// `corrected` uses n R^2 / (2 (1 + rho)) from the exact inversion.
QuantileApprox quantile_asym(const DistParams& params, double p,
                             Transcription form = Transcription::printed);

}  // namespace prodnorm::asym
