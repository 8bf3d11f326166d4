#pragma once

// Reference relative errors. Rows follow the printed order; N/A cells are NaN.

#include <array>
#include <limits>

namespace prodnorm::reference {

inline constexpr double kNA = std::numeric_limits<double>::quiet_NaN();

struct Row {
  double mu_x, mu_y, rho;
  int n;
  int order;  // 0, 1, 2 for tail and density rows; -1 for quantile rows
  std::array<double, 6> cells;
};

inline constexpr std::array<double, 6> kTable1X = {2.5, 5.0, 7.5, 10.0, 12.5, 15.0};
inline constexpr std::array<double, 6> kQuantileP = {0.95, 0.975, 0.99, 0.995, 0.999, 0.9999};

inline constexpr std::array<Row, 27> kTable1 = {{
    {1, -1, -0.5, 1, 0, {4.4E-02, 2.3E-02, 1.6E-02, 1.2E-02, 9.7E-03, 8.1E-03}},
    {1, -1, -0.5, 1, 1, {-8.4E-03, -2.3E-03, -1.1E-03, -6.2E-04, -4.0E-04, -2.8E-04}},
    {1, -1, -0.5, 1, 2, {2.9E-03, 4.2E-04, 1.3E-04, 5.8E-05, 3.0E-05, 1.8E-05}},
    {1, -1, 0, 1, 0, {8.2E-02, 4.5E-02, 3.1E-02, 2.4E-02, 1.9E-02, 1.6E-02}},
    {1, -1, 0, 1, 1, {-2.6E-02, -7.6E-03, -3.6E-03, -2.1E-03, -1.4E-03, -9.6E-04}},
    {1, -1, 0, 1, 2, {1.4E-02, 2.2E-03, 7.1E-04, 3.1E-04, 1.7E-04, 9.8E-05}},
    {1, -1, 0.5, 1, 0, {1.2E-01, 6.7E-02, 4.6E-02, 3.5E-02, 2.9E-02, 2.4E-02}},
    {1, -1, 0.5, 1, 1, {-4.5E-02, -1.3E-02, -6.1E-03, -3.5E-03, -2.3E-03, -1.6E-03}},
    {1, -1, 0.5, 1, 2, {2.6E-02, 3.9E-03, 1.3E-03, 5.5E-04, 2.9E-04, 1.7E-04}},
    {1, 0, -0.5, 1, 0, {-9.0E-02, -7.2E-02, -6.1E-02, -5.5E-02, -5.0E-02, -4.6E-02}},
    {1, 0, -0.5, 1, 1, {2.7E-02, 1.3E-02, 8.1E-03, 5.9E-03, 4.5E-03, 3.7E-03}},
    {1, 0, -0.5, 1, 2, {1.2E-02, 5.4E-03, 3.1E-03, 2.1E-03, 1.5E-03, 1.2E-03}},
    {1, 0, 0, 1, 0, {-7.2E-02, -4.8E-02, -4.0E-02, -3.5E-02, -3.3E-02, -3.0E-02}},
    {1, 0, 0, 1, 1, {2.0E-02, 1.8E-02, 1.5E-02, 1.2E-02, 1.0E-02, 8.7E-03}},
    {1, 0, 0, 1, 2, {-2.5E-02, -4.9E-03, -6.0E-04, 5.7E-04, 8.7E-04, 8.9E-04}},
    {1, 0, 0.5, 1, 0, {-1.0E-01, -6.0E-02, -4.1E-02, -3.2E-02, -2.6E-02, -2.3E-02}},
    {1, 0, 0.5, 1, 1, {-4.2E-02, -1.4E-02, -3.0E-03, 1.9E-03, 4.1E-03, 5.0E-03}},
    {1, 0, 0.5, 1, 2, {-9.5E-02, -4.2E-02, -2.2E-02, -1.2E-02, -7.5E-03, -4.7E-03}},
    {1, 1, -0.5, 1, 0, {-2.1E-01, -1.6E-01, -1.3E-01, -1.1E-01, -1.0E-01, -9.4E-02}},
    {1, 1, -0.5, 1, 1, {-2.3E-02, -1.5E-02, -1.1E-02, -9.0E-03, -7.4E-03, -6.4E-03}},
    {1, 1, -0.5, 1, 2, {1.4E-02, 4.6E-03, 2.3E-03, 1.4E-03, 9.8E-04, 7.2E-04}},
    {1, 1, 0, 1, 0, {-1.1E-01, -8.8E-02, -7.6E-02, -6.8E-02, -6.2E-02, -5.7E-02}},
    {1, 1, 0, 1, 1, {3.0E-02, 1.4E-02, 8.4E-03, 5.9E-03, 4.5E-03, 3.7E-03}},
    {1, 1, 0, 1, 2, {1.9E-02, 8.0E-03, 4.6E-03, 3.0E-03, 2.2E-03, 1.7E-03}},
    {1, 1, 0.5, 1, 0, {-5.4E-02, -4.0E-02, -3.4E-02, -3.1E-02, -2.8E-02, -2.6E-02}},
    {1, 1, 0.5, 1, 1, {2.1E-02, 1.4E-02, 1.0E-02, 7.8E-03, 6.3E-03, 5.2E-03}},
    {1, 1, 0.5, 1, 2, {-6.0E-03, 6.5E-04, 1.1E-03, 1.0E-03, 8.1E-04, 6.6E-04}},
}};

inline constexpr std::array<Row, 27> kTable3 = {{
    {1, -1, -0.5, 1, 0, {5.2E-01, 3.6E-01, 2.6E-01, 2.1E-01, 1.5E-01, 9.5E-02}},
    {1, -1, -0.5, 1, 1, {-2.5E+00, -1.3E+00, -7.4E-01, -5.4E-01, -3.2E-01, -2.0E-01}},
    {1, -1, -0.5, 1, 2, {1.6E+01, 5.0E+00, 1.7E+00, 9.2E-01, 2.9E-01, 5.2E-02}},
    {1, -1, 0, 1, 0, {4.3E-01, 3.1E-01, 2.3E-01, 1.9E-01, 1.4E-01, 9.1E-02}},
    {1, -1, 0, 1, 1, {-1.7E+00, -1.0E+00, -6.3E-01, -4.7E-01, -3.0E-01, -1.9E-01}},
    {1, -1, 0, 1, 2, {8.6E+00, 3.2E+00, 1.2E+00, 6.9E-01, 2.2E-01, 3.9E-02}},
    {1, -1, 0.5, 1, 0, {4.0E-01, 3.0E-01, 2.2E-01, 1.8E-01, 1.3E-01, 9.2E-02}},
    {1, -1, 0.5, 1, 1, {-1.5E+00, -9.0E-01, -5.7E-01, -4.4E-01, -2.8E-01, -1.8E-01}},
    {1, -1, 0.5, 1, 2, {6.3E+00, 2.5E+00, 1.0E+00, 5.9E-01, 1.9E-01, 3.3E-02}},
    {1, 0, -0.5, 1, 0, {-3.1E-01, -2.9E-01, -2.8E-01, -2.6E-01, -2.4E-01, -2.2E-01}},
    {1, 0, -0.5, 1, 1, {1.2E-01, 8.5E-02, 6.0E-02, 4.7E-02, 3.4E-02, 2.5E-02}},
    {1, 0, -0.5, 1, 2, {1.6E-01, 1.1E-01, 7.9E-02, 6.4E-02, 4.7E-02, 3.5E-02}},
    {1, 0, 0, 1, 0, {-1.8E-01, -1.7E-01, -1.6E-01, -1.6E-01, -1.5E-01, -1.2E-01}},
    {1, 0, 0, 1, 1, {1.8E-01, 1.4E-01, 1.0E-01, 8.9E-02, 7.0E-02, 6.4E-02}},
    {1, 0, 0, 1, 2, {7.7E-02, 6.0E-02, 4.6E-02, 3.9E-02, 3.3E-02, 3.6E-02}},
    {1, 0, 0.5, 1, 0, {-1.3E-01, -1.3E-01, -1.2E-01, -1.2E-01, -1.1E-01, -9.0E-02}},
    {1, 0, 0.5, 1, 1, {1.6E-01, 1.3E-01, 9.9E-02, 8.6E-02, 6.7E-02, 6.2E-02}},
    {1, 0, 0.5, 1, 2, {7.9E-03, 1.1E-02, 1.2E-02, 1.2E-02, 1.2E-02, 2.1E-02}},
    {1, 1, -0.5, 1, 0, {-5.5E-01, -5.2E-01, -4.9E-01, -4.7E-01, -4.4E-01, -4.1E-01}},
    {1, 1, -0.5, 1, 1, {-1.9E-01, -1.7E-01, -1.5E-01, -1.4E-01, -1.2E-01, -1.1E-01}},
    {1, 1, -0.5, 1, 2, {1.5E-03, -2.9E-03, -5.1E-03, -5.1E-03, -8.8E-03, -2.0E-02}},
    {1, 1, 0, 1, 0, {-3.9E-01, -3.7E-01, -3.4E-01, -3.3E-01, -3.1E-01, -2.8E-01}},
    {1, 1, 0, 1, 1, {-2.2E-02, -2.6E-02, -2.6E-02, -2.6E-02, -2.9E-02, -2.6E-02}},
    {1, 1, 0, 1, 2, {8.0E-02, 5.9E-02, 4.5E-02, 3.7E-02, 2.2E-02, 1.4E-02}},
    {1, 1, 0.5, 1, 0, {-2.9E-01, -2.8E-01, -2.6E-01, -2.5E-01, -2.3E-01, -2.2E-01}},
    {1, 1, 0.5, 1, 1, {4.6E-02, 3.1E-02, 2.2E-02, 1.2E-02, 4.0E-03, -1.6E-02}},
    {1, 1, 0.5, 1, 2, {8.4E-02, 6.2E-02, 4.8E-02, 3.4E-02, 2.2E-02, -2.6E-03}},
}};

inline constexpr std::array<Row, 27> kTable4 = {{
    {1, -1, -0.5, 3, 2, {kNA, 1.4E+00, 1.6E-01, 1.7E-02, -6.3E-02, -7.0E-02}},
    {1, -1, -0.5, 5, 2, {kNA, kNA, -2.7E-01, -2.5E-01, -1.8E-01, -1.2E-01}},
    {1, -1, -0.5, 7, 2, {kNA, kNA, kNA, kNA, -3.4E-01, -1.8E-01}},
    {1, -1, 0, 3, 2, {5.7E-01, 1.3E-01, -1.3E-02, -4.8E-02, -6.9E-02, -7.1E-02}},
    {1, -1, 0, 5, 2, {-2.9E-01, -2.5E-01, -2.0E-01, -1.7E-01, -1.3E-01, -9.8E-02}},
    {1, -1, 0, 7, 2, {kNA, -4.9E-01, -3.2E-01, -2.5E-01, -1.7E-01, -1.2E-01}},
    {1, -1, 0.5, 3, 2, {1.6E-01, 1.9E-02, -4.3E-02, -6.0E-02, -7.0E-02, -7.0E-02}},
    {1, -1, 0.5, 5, 2, {-2.4E-01, -2.0E-01, -1.6E-01, -1.4E-01, -1.1E-01, -8.3E-02}},
    {1, -1, 0.5, 7, 2, {-3.5E-01, -2.7E-01, -2.1E-01, -1.8E-01, -1.3E-01, -1.0E-01}},
    {1, 0, -0.5, 3, 2, {-1.4E-01, -1.2E-01, -1.0E-01, -9.0E-02, -7.3E-02, -5.3E-02}},
    {1, 0, -0.5, 5, 2, {-5.9E-01, -5.1E-01, -4.3E-01, -3.8E-01, -3.1E-01, -2.4E-01}},
    {1, 0, -0.5, 7, 2, {-8.7E-01, -8.0E-01, -7.1E-01, -6.6E-01, -5.6E-01, -4.6E-01}},
    {1, 0, 0, 3, 2, {9.1E-03, 3.0E-03, -7.3E-04, -7.1E-04, -4.0E-03, 5.1E-03}},
    {1, 0, 0, 5, 2, {-2.2E-01, -1.8E-01, -1.5E-01, -1.3E-01, -1.1E-01, -8.8E-02}},
    {1, 0, 0, 7, 2, {-4.4E-01, -3.8E-01, -3.2E-01, -2.9E-01, -2.4E-01, -1.9E-01}},
    {1, 0, 0.5, 3, 2, {2.9E-02, 2.0E-02, 1.3E-02, 1.3E-02, 3.7E-03, 4.7E-03}},
    {1, 0, 0.5, 5, 2, {-8.6E-02, -7.1E-02, -5.9E-02, -5.2E-02, -4.1E-02, -3.2E-02}},
    {1, 0, 0.5, 7, 2, {-2.0E-01, -1.7E-01, -1.4E-01, -1.2E-01, -9.4E-02, -7.3E-02}},
    {1, 1, -0.5, 3, 2, {-4.5E-01, -4.1E-01, -3.6E-01, -3.3E-01, -2.7E-01, -2.2E-01}},
    {1, 1, -0.5, 5, 2, {-7.5E-01, -7.0E-01, -6.5E-01, -6.2E-01, -5.5E-01, -4.8E-01}},
    {1, 1, -0.5, 7, 2, {-9.0E-01, -8.7E-01, -8.3E-01, -8.1E-01, -7.5E-01, -6.8E-01}},
    {1, 1, 0, 3, 2, {-1.7E-01, -1.5E-01, -1.3E-01, -1.2E-01, -9.1E-02, -6.7E-02}},
    {1, 1, 0, 5, 2, {-4.0E-01, -3.6E-01, -3.1E-01, -2.9E-01, -2.4E-01, -1.9E-01}},
    {1, 1, 0, 7, 2, {-5.7E-01, -5.3E-01, -4.8E-01, -4.5E-01, -3.9E-01, -3.3E-01}},
    {1, 1, 0.5, 3, 2, {-6.8E-02, -5.8E-02, -4.9E-02, -4.4E-02, -3.8E-02, -1.4E-02}},
    {1, 1, 0.5, 5, 2, {-1.9E-01, -1.7E-01, -1.4E-01, -1.3E-01, -1.0E-01, -1.0E-01}},
    {1, 1, 0.5, 7, 2, {-2.9E-01, -2.6E-01, -2.3E-01, -2.1E-01, -1.7E-01, -1.5E-01}},
}};

inline constexpr std::array<Row, 27> kTable5 = {{
    {1, -1, -0.5, 3, -1, {kNA, 1.0E-01, 2.2E-02, 9.1E-03, 9.8E-04, -8.0E-04}},
    {1, -1, -0.5, 5, -1, {kNA, kNA, 2.6E-01, 2.4E-02, -2.0E-02, -1.9E-02}},
    {1, -1, -0.5, 7, -1, {kNA, kNA, kNA, kNA, -5.7E-02, -5.2E-02}},
    {1, -1, 0, 3, -1, {-7.4E-02, -4.4E-02, -2.7E-02, -2.1E-02, -1.3E-02, -8.2E-03}},
    {1, -1, 0, 5, -1, {-8.2E-01, -3.3E-01, -1.8E-01, -1.3E-01, -7.8E-02, -4.7E-02}},
    {1, -1, 0, 7, -1, {kNA, -1.2E+00, -4.7E-01, -3.2E-01, -1.8E-01, -1.1E-01}},
    {1, -1, 0.5, 3, -1, {-9.6E-02, -6.1E-02, -3.9E-02, -3.0E-02, -1.8E-02, -1.1E-02}},
    {1, -1, 0.5, 5, -1, {-4.6E-01, -2.9E-01, -1.9E-01, -1.4E-01, -9.0E-02, -5.5E-02}},
    {1, -1, 0.5, 7, -1, {-9.9E-01, -6.0E-01, -3.9E-01, -3.0E-01, -1.9E-01, -1.2E-01}},
    {1, 0, -0.5, 3, -1, {-1.4E-01, -1.2E-01, -1.1E-01, -9.7E-02, -8.2E-02, -6.7E-02}},
    {1, 0, -0.5, 5, -1, {-2.4E-01, -2.0E-01, -1.6E-01, -1.5E-01, -1.2E-01, -9.8E-02}},
    {1, 0, -0.5, 7, -1, {-3.3E-01, -2.5E-01, -2.0E-01, -1.8E-01, -1.5E-01, -1.2E-01}},
    {1, 0, 0, 3, -1, {-1.4E-01, -1.1E-01, -9.2E-02, -8.1E-02, -6.4E-02, -4.9E-02}},
    {1, 0, 0, 5, -1, {-2.4E-01, -1.9E-01, -1.5E-01, -1.3E-01, -1.0E-01, -8.0E-02}},
    {1, 0, 0, 7, -1, {-3.3E-01, -2.6E-01, -2.0E-01, -1.8E-01, -1.4E-01, -1.0E-01}},
    {1, 0, 0.5, 3, -1, {-1.2E-01, -1.0E-01, -8.1E-02, -7.0E-02, -5.5E-02, -4.1E-02}},
    {1, 0, 0.5, 5, -1, {-2.1E-01, -1.7E-01, -1.3E-01, -1.2E-01, -8.9E-02, -6.7E-02}},
    {1, 0, 0.5, 7, -1, {-2.8E-01, -2.2E-01, -1.8E-01, -1.5E-01, -1.2E-01, -8.9E-02}},
    {1, 1, -0.5, 3, -1, {-3.6E-01, -3.2E-01, -2.8E-01, -2.6E-01, -2.3E-01, -1.9E-01}},
    {1, 1, -0.5, 5, -1, {-4.6E-01, -4.1E-01, -3.6E-01, -3.4E-01, -2.9E-01, -2.5E-01}},
    {1, 1, -0.5, 7, -1, {-5.2E-01, -4.7E-01, -4.1E-01, -3.8E-01, -3.3E-01, -2.9E-01}},
    {1, 1, 0, 3, -1, {-2.7E-01, -2.4E-01, -2.1E-01, -1.9E-01, -1.6E-01, -1.3E-01}},
    {1, 1, 0, 5, -1, {-3.8E-01, -3.3E-01, -2.9E-01, -2.6E-01, -2.2E-01, -1.8E-01}},
    {1, 1, 0, 7, -1, {-4.5E-01, -3.9E-01, -3.4E-01, -3.1E-01, -2.6E-01, -2.2E-01}},
    {1, 1, 0.5, 3, -1, {-2.2E-01, -1.9E-01, -1.7E-01, -1.5E-01, -1.3E-01, -1.0E-01}},
    {1, 1, 0.5, 5, -1, {-3.2E-01, -2.8E-01, -2.4E-01, -2.2E-01, -1.8E-01, -1.5E-01}},
    {1, 1, 0.5, 7, -1, {-3.9E-01, -3.3E-01, -2.9E-01, -2.6E-01, -2.2E-01, -1.8E-01}},
}};

}  // namespace prodnorm::reference
