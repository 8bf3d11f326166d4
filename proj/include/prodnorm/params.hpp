#pragma once

// Parameters of S_n, the sum of n independent copies of XY where (X, Y) is
// bivariate normal.

namespace prodnorm {

struct DistParams {
  double mu_x = 0.0;
  double mu_y = 0.0;
  double sigma_x = 1.0;
  double sigma_y = 1.0;
  double rho = 0.0;
  int n = 1;

  /// Throws Error(parameter) unless sigma_x, sigma_y > 0, |rho| < 1, n >= 1.
  void validate() const;
};

/// Standardised quantities shared by every formula. `rho` and `n` are
/// carried along so coefficient code needs a single argument.
struct DerivedParams {
  double r_x = 0.0;  ///< mu_x / sigma_x
  double r_y = 0.0;  ///< mu_y / sigma_y
  double s = 1.0;    ///< sigma_x sigma_y
  double c_n = 1.0;  ///< exp(-n (r_x^2 + r_y^2 - 2 rho r_x r_y) / (2 (1 - rho^2)))
  double rho = 0.0;
  int n = 1;
};

DerivedParams derive(const DistParams& params);

/// Parameters of the mirrored variable: S_n has the law of -S'_n where S'_n
/// has (mu_y, rho) replaced by (-mu_y, -rho).
DistParams reflect(const DistParams& params);

}  // namespace prodnorm
