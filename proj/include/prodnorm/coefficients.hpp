#pragma once

// Expansion coefficients of the density (c, d) and of the tail (gamma,
// delta). All are dimensionless functions of (r_x, r_y, rho, n).

#include <vector>

#include "prodnorm/params.hpp"

namespace prodnorm::asym {

enum class CoefficientKind { c, d, gamma, delta, lemma1_U, lemma1_V };

struct CoefficientSet {
  CoefficientKind kind = CoefficientKind::c;
  int order = 0;
  std::vector<double> values;  // values[0..order]
  DerivedParams params;        // left default for the lemma kinds

  double operator[](int k) const { return values.at(static_cast<std::size_t>(k)); }
};

/// Orders beyond this are rejected; the Puiseux tables stop here.
inline constexpr int kMaxExpansionOrder = 40;

/// Printed versus corrected transcription of an expansion whose reference
/// form contains a misprint. See `coeff_delta` and `lemma1_V`.
enum class Transcription { printed, corrected };

/// c_0..c_order. Requires r_x + r_y != 0.
CoefficientSet coeff_c(const DerivedParams& dp, int order);

enum class DRepresentation { finite_sum, kummer };

/// d_0..d_order. The default finite sum and the Kummer-function form are
/// algebraically equal; the latter exists for cross-checking.
CoefficientSet coeff_d(const DerivedParams& dp, int order,
                       DRepresentation rep = DRepresentation::finite_sum);

/// gamma_0..gamma_order. Requires r_x + r_y != 0.
CoefficientSet coeff_gamma(const DerivedParams& dp, int order);

/// delta_0..delta_order. The printed form uses (k+1-n/2)_{k-j};
/// integrating the d-expansion term by term gives (j+1-n/2)_{k-j}. They
/// differ from order 1 on. `printed` is the default because the reference
/// closed forms for delta_1, delta_2 follow it.
CoefficientSet coeff_delta(const DerivedParams& dp, int order,
                           Transcription form = Transcription::printed);

/// Closed forms for the first two coefficients of each family. The c and
/// gamma entries are NaN when r_x + r_y = 0.
struct LowOrderCoefficients {
  double c1, c2, d1, d2, gamma1, gamma2, delta1, delta2;
};

LowOrderCoefficients explicit_low_order(const DerivedParams& dp);

}  // namespace prodnorm::asym
