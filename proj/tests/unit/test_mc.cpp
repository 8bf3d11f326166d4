#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prodnorm/error.hpp"
#include "prodnorm/exact.hpp"
#include "prodnorm/mc.hpp"
#include "prodnorm/rng.hpp"

using namespace prodnorm;
using namespace prodnorm::mc;

namespace {

DistParams make(double mu_x, double mu_y, double rho, int n) {
  DistParams p;
  p.mu_x = mu_x;
  p.mu_y = mu_y;
  p.rho = rho;
  p.n = n;
  return p;
}

struct Moments {
  double mean, std_error;
};

Moments moments(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace

TEST_CASE("Philox4x32-10 known answers") {
  using W = std::array<std::uint32_t, 4>;
  CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == W{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        W{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        W{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("inverse normal CDF") {
  CHECK(inverse_normal_cdf(0.5) == 0.0);
  CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-15));
  CHECK(inverse_normal_cdf(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-14));
  for (double p : {1e-300, 1e-12, 0.02, 0.3, 0.7, 0.999}) {
    const double z = inverse_normal_cdf(p);
    CHECK(0.5 * std::erfc(-z / std::sqrt(2.0)) == doctest::Approx(p).epsilon(1e-13));
  }
  // 1 - p is exact for these.
  for (double p : {0.25, 0.125, 0.0625, 1.0 / 1024.0}) CHECK(inverse_normal_cdf(1.0 - p) == doctest::Approx(-inverse_normal_cdf(p)).epsilon(1e-13));
}

TEST_CASE("streams are deterministic and seekable") {
  RandomStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  std::vector<double> va, vb, vc, vd;
  for (int i = 0; i < 100; ++i) {
    va.push_back(a.next_uniform());
    vb.push_back(b.next_uniform());
    vc.push_back(c.next_uniform());
    vd.push_back(d.next_uniform());
  }
  CHECK(va == vb);
  CHECK(va != vc);
  CHECK(va != vd);
  for (double u : va) CHECK((u > 0.0 && u < 1.0));
  RandomStream e(42, 7);
  e.seek(10);  // two uniforms per block
  CHECK(e.next_uniform() == va[20]);
  CHECK(e.next_uniform() == va[21]);
  CHECK(e.next_uniform() == va[22]);
}

TEST_CASE("sampled moments") {
  {
    const auto xs = sample_run(make(0, 0, 0, 1), 1'000'000, RandomStream(1, 0));
    const auto m = moments(xs);
    CHECK(std::abs(m.mean) < 4.0 * m.std_error);
  }
  {
    // E[S_n] = n (mu_x mu_y + rho sigma_x sigma_y)
    const auto xs = sample_run(make(1, 1, 0.5, 3), 1'000'000, RandomStream(1, 1));
    const auto m = moments(xs);
    CHECK(std::abs(m.mean - 4.5) < 4.0 * m.std_error);
  }
  DistParams p = make(0.3, -1.2, -0.4, 2);
  p.sigma_x = 2.0;
  p.sigma_y = 0.5;
  const auto m = moments(sample_run(p, 400'000, RandomStream(1, 2)));
  CHECK(std::abs(m.mean - 2.0 * (0.3 * -1.2 - 0.4)) < 4.0 * m.std_error);
}

TEST_CASE("sample_sn draws exactly 2n normals") {
  const auto p = make(1, 1, 0.2, 3);
  RandomStream s(5, 0), t(5, 0);
  (void)sample_sn(p, s);
  for (int i = 0; i < 6; ++i) (void)t.next_normal();
  CHECK(s.next_uniform() == t.next_uniform());
}

TEST_CASE("runs do not depend on the thread count") {
  const auto p = make(1, -1, -0.5, 2);
  const RandomStream origin(2024, 3);
  const auto one = sample_run(p, 100'000, origin, 1);
  CHECK(one == sample_run(p, 100'000, origin, 3));
  CHECK(one == sample_run(p, 100'000, origin, 8));
  const auto t1 = empirical_tail(p, 1.0, 100'000, origin, 1);
  const auto t4 = empirical_tail(p, 1.0, 100'000, origin, 4);
  CHECK(t1.estimate == t4.estimate);
  CHECK(t1.std_error == t4.std_error);
}

TEST_CASE("empirical tail") {
  const auto sym = make(0, 0, 0, 1);
  CHECK(empirical_tail(sym, -1e9, 1000, RandomStream(1, 0)).estimate == 1.0);
  const auto half = empirical_tail(sym, 0.0, 200'000, RandomStream(1, 0));
  CHECK(half.n_samples == 200'000);
  CHECK(std::abs(half.estimate - 0.5) < 4.0 * half.std_error);

  const auto p = make(1, 0, 0.5, 1);
  const double x = exact::quantile_numeric(p, 0.99);
  const auto r = empirical_tail(p, x, 1'000'000, RandomStream(1, 4));
  CHECK(std::abs(r.estimate - 0.01) < 4.0 * r.std_error);
  CHECK_THROWS_AS(empirical_tail(p, x, 999, RandomStream(1, 4)), Error);
}

TEST_CASE("calibration over substreams") {
  // Laplace case: P(S_2 > 1) = e^{-1}/2.
  const auto p = make(0, 0, 0, 2);
  const double truth = 0.5 * std::exp(-1.0);
  int covered = 0;
  for (std::uint64_t sub = 0; sub < 20; ++sub) {
    const auto r = empirical_tail(p, 1.0, 20'000, RandomStream(77, sub));
    if (std::abs(r.estimate - truth) <= 2.0 * r.std_error) ++covered;
  }
  CHECK(covered >= 17);
}

TEST_CASE("empirical quantile") {
  const auto sym = make(0, 0, 0, 1);
  const auto med = empirical_quantile(sym, 0.5, 100'001, RandomStream(3, 0));
  // The density is unbounded at the median, so the order-statistic error
  // formula does not apply; the sample median sits within a few 1e-3 of 0.
  CHECK(std::abs(med.estimate) < 0.01);

  const auto p = make(1, -1, 0, 3);
  const auto r = empirical_quantile(p, 0.99, 1'000'000, RandomStream(3, 1));
  CHECK(std::isfinite(r.std_error));
  CHECK(std::abs(r.estimate - exact::quantile_numeric(p, 0.99)) < 4.0 * r.std_error);

  // k = floor(N (1 - p)) + 1: with N = 1000 and p = 0.99 the 11th largest.
  const auto small = sample_run(p, 1000, RandomStream(3, 2));
  auto sorted = small;
  std::sort(sorted.begin(), sorted.end());
  CHECK(empirical_quantile(p, 0.99, 1000, RandomStream(3, 2)).estimate == sorted[1000 - 11]);
  CHECK_THROWS_AS(empirical_quantile(p, 1.0, 1000, RandomStream(3, 2)), Error);
}
