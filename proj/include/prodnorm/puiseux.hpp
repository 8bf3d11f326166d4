#pragma once

#include <vector>

namespace prodnorm::asym {

/// Coefficients g_{i,j}(a, b) of u^i y^{j/2} in
///   (1 + u y)^a exp(b y^{-1/2} (sqrt(1 + u y) - 1)).
/// Only ceil(j/2) <= i <= j can be nonzero.
struct PuiseuxTable {
  double a = 0.0;
  double b = 0.0;
  int max_j = 0;
  std::vector<std::vector<double>> g;  // g[i][j], (max_j + 1) x (max_j + 1)

  /// g_{i,j}, or 0 outside the stored triangle.
  double at(int i, int j) const;
};

inline constexpr int kMaxPuiseuxOrder = 40;

PuiseuxTable puiseux_g(double a, double b, int max_j);

}  // namespace prodnorm::asym
