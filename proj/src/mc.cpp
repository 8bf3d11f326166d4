#include "prodnorm/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "prodnorm/error.hpp"
#include "prodnorm/exact.hpp"

namespace prodnorm::mc {

namespace {

void check_samples(long long n_samples) {
  if (n_samples < kMinSamples) fail(ErrorKind::parameter, "Monte Carlo needs at least 1000 samples");
}

unsigned worker_count(unsigned threads, long long n_samples) {
  unsigned w = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  const long long per_worker_min = 1 << 14;
  const long long cap = std::max(1LL, n_samples / per_worker_min);
  return static_cast<unsigned>(std::min<long long>(w, cap));
}

// Runs body(first, last, worker) over contiguous chunks of [0, n).
template <class Body>
void parallel_chunks(long long n, unsigned workers, Body body) {
  if (workers <= 1) {
    body(0LL, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const long long first = n * w / workers;
    const long long last = n * (w + 1) / workers;
    pool.emplace_back(body, first, last, w);
  }
  for (auto& t : pool) t.join();
}

}  // namespace

double sample_sn(const DistParams& params, RandomStream& stream) {
  const double c = std::sqrt(1.0 - params.rho * params.rho);
  double sum = 0.0;
  for (int i = 0; i < params.n; ++i) {
    const double u = stream.next_normal();
    const double v = stream.next_normal();
    sum += (params.sigma_x * u + params.mu_x) * (params.sigma_y * (params.rho * u + c * v) + params.mu_y);
  }
  return sum;
}

std::vector<double> sample_run(const DistParams& params, long long n_samples, const RandomStream& origin,
                               unsigned threads) {
  params.validate();
  check_samples(n_samples);
  std::vector<double> out(static_cast<std::size_t>(n_samples));
  const auto blocks_per_sample = static_cast<std::uint64_t>(params.n);
  parallel_chunks(n_samples, worker_count(threads, n_samples), [&](long long first, long long last, unsigned) {
    RandomStream s(origin.master_seed(), origin.substream());
    for (long long i = first; i < last; ++i) {
      s.seek(static_cast<std::uint64_t>(i) * blocks_per_sample);
      out[static_cast<std::size_t>(i)] = sample_sn(params, s);
    }
  });
  return out;
}

EmpiricalResult empirical_tail(const DistParams& params, double x, long long n_samples,
                               const RandomStream& origin, unsigned threads) {
  params.validate();
  check_samples(n_samples);
  const unsigned workers = worker_count(threads, n_samples);
  std::vector<long long> counts(workers, 0);
  const auto blocks_per_sample = static_cast<std::uint64_t>(params.n);
  parallel_chunks(n_samples, workers, [&](long long first, long long last, unsigned w) {
    RandomStream s(origin.master_seed(), origin.substream());
    long long c = 0;
    for (long long i = first; i < last; ++i) {
      s.seek(static_cast<std::uint64_t>(i) * blocks_per_sample);
      if (sample_sn(params, s) > x) ++c;
    }
    counts[w] = c;
  });
  long long hits = 0;
  for (long long c : counts) hits += c;
  EmpiricalResult r;
  r.n_samples = n_samples;
  r.estimate = static_cast<double>(hits) / static_cast<double>(n_samples);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(n_samples));
  return r;
}

EmpiricalResult empirical_quantile(const DistParams& params, double p, long long n_samples,
                                   const RandomStream& origin, unsigned threads) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::domain, "empirical_quantile: p must lie in (0, 1)");
  auto xs = sample_run(params, n_samples, origin, threads);
  const auto n = static_cast<long long>(xs.size());
  const long long k = static_cast<long long>(std::floor(static_cast<double>(n) * (1.0 - p))) + 1;
  const long long idx = std::clamp(n - k, 0LL, n - 1);  // k-th largest in ascending order
  std::nth_element(xs.begin(), xs.begin() + idx, xs.end());

  EmpiricalResult r;
  r.n_samples = n;
  r.estimate = xs[static_cast<std::size_t>(idx)];
  r.std_error = std::numeric_limits<double>::quiet_NaN();
  try {
    const double f = exact::pdf(params, r.estimate);
    if (f > 0.0) r.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(n)) / f;
  } catch (const Error&) {
    // leave NaN: the density is singular or failed at this point
  }
  return r;
}

}  // namespace prodnorm::mc
