#include "prodnorm/params.hpp"

#include <cmath>

#include "prodnorm/error.hpp"

namespace prodnorm {

void DistParams::validate() const {
  if (!std::isfinite(mu_x) || !std::isfinite(mu_y))
    fail(ErrorKind::parameter, "means must be finite");
  if (!(sigma_x > 0.0) || !(sigma_y > 0.0) || !std::isfinite(sigma_x) || !std::isfinite(sigma_y))
    fail(ErrorKind::parameter, "standard deviations must be positive and finite");
  if (!(std::abs(rho) < 1.0)) fail(ErrorKind::parameter, "correlation must lie in (-1, 1)");
  if (n < 1) fail(ErrorKind::parameter, "n must be at least 1");
}

DerivedParams derive(const DistParams& params) {
  params.validate();
  DerivedParams out;
  out.r_x = params.mu_x / params.sigma_x;
  out.r_y = params.mu_y / params.sigma_y;
  out.s = params.sigma_x * params.sigma_y;
  out.rho = params.rho;
  out.n = params.n;
  const double quad_form = out.r_x * out.r_x + out.r_y * out.r_y - 2.0 * out.rho * out.r_x * out.r_y;
  out.c_n = std::exp(-params.n * quad_form / (2.0 * (1.0 - out.rho * out.rho)));
  return out;
}

DistParams reflect(const DistParams& params) {
  DistParams out = params;
  out.mu_y = -params.mu_y;
  out.rho = -params.rho;
  return out;
}

}  // namespace prodnorm
