#pragma once

// Monte Carlo estimates for S_n. Sample i of a run always reads the blocks
// starting at i * n of its stream, so a run is reproducible for a given
// (seed, substream) no matter how it is split across threads.

#include <cstdint>
#include <vector>

#include "prodnorm/params.hpp"
#include "prodnorm/rng.hpp"

namespace prodnorm::mc {

struct EmpiricalResult {
  double estimate = 0.0;
  long long n_samples = 0;
  double std_error = 0.0;
};

inline constexpr long long kMinSamples = 1000;

/// One realisation, sum_i (sigma_x U_i + mu_x)(sigma_y (rho U_i + sqrt(1-rho^2) V_i) + mu_y),
/// drawing exactly 2n normals from `stream`.
double sample_sn(const DistParams& params, RandomStream& stream);

/// Samples 0..n_samples-1 of the run identified by `origin`; `threads` = 0
/// picks the hardware concurrency.
std::vector<double> sample_run(const DistParams& params, long long n_samples, const RandomStream& origin,
                               unsigned threads = 0);

/// Fraction of samples above x with binomial standard error.
EmpiricalResult empirical_tail(const DistParams& params, double x, long long n_samples,
                               const RandomStream& origin, unsigned threads = 0);

/// The k-th largest sample, k = floor(N (1 - p)) + 1. The standard error is
/// sqrt(p (1 - p) / N) / f(estimate) with f the exact density, or NaN where
/// the density cannot be evaluated.
EmpiricalResult empirical_quantile(const DistParams& params, double p, long long n_samples,
                                   const RandomStream& origin, unsigned threads = 0);

}  // namespace prodnorm::mc
