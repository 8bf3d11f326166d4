#include <doctest.h>

#include <cmath>

#include "prodnorm/error.hpp"
#include "prodnorm/exact.hpp"
#include "prodnorm/expansions.hpp"
#include "support.hpp"

using namespace prodnorm;
using namespace prodnorm::asym;
using prodnorm::testing::rel_diff;

namespace {

DistParams make(double mu_x, double mu_y, double rho, int n) {
  DistParams p;
  p.mu_x = mu_x;
  p.mu_y = mu_y;
  p.rho = rho;
  p.n = n;
  return p;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::domain;
}

}  // namespace

TEST_CASE("Laplace case is reproduced exactly") {
  // Centred, independent, n = 2: f(x) = e^{-|x|}/2 and every d_k, k >= 1, vanishes.
  const auto p = make(0, 0, 0, 2);
  for (double x : {1.0, 7.0, 30.0})
    for (int order : {0, 1, 4}) {
      CHECK(rel_diff(pdf_asym(p, x, TailSide::upper, order), 0.5 * std::exp(-x)) < 1e-14);
      CHECK(rel_diff(pdf_asym(p, -x, TailSide::lower, order), 0.5 * std::exp(-x)) < 1e-14);
      CHECK(rel_diff(tail_asym(p, x, TailSide::upper, order, Transcription::corrected), 0.5 * std::exp(-x)) < 1e-14);
    }
  // The printed delta recursion adds spurious corrections here.
  CHECK(rel_diff(tail_asym(p, 5.0, TailSide::upper, 1, Transcription::printed), 0.5 * std::exp(-5.0)) > 0.1);
  for (double pr : {0.9, 0.99, 0.9999}) {
    const double q = -std::log(2.0 * (1.0 - pr));
    CHECK(quantile_asym(p, pr, Transcription::corrected).value == doctest::Approx(q).epsilon(1e-12));
    CHECK(quantile_asym(p, 1.0 - pr, Transcription::corrected).value == doctest::Approx(-q).epsilon(1e-12));
  }
}

TEST_CASE("lower side is the mirrored upper side") {
  const auto p = make(1, 0.4, 0.3, 3);
  for (double x : {5.0, 20.0}) {
    CHECK(pdf_asym(p, -x, TailSide::lower, 2) == pdf_asym(reflect(p), x, TailSide::upper, 2));
    CHECK(tail_asym(p, -x, TailSide::lower, 2) == tail_asym(reflect(p), x, TailSide::upper, 2));
  }
  CHECK(quantile_asym(p, 0.01).value == -quantile_asym(reflect(p), 0.99).value);
}

TEST_CASE("expansions approach the exact values") {
  for (const auto& p : {make(1, -1, -0.5, 1), make(1, 0, 0, 1), make(1, 1, 0.5, 3), make(0.5, -0.5, 0.2, 5)}) {
    auto err = [&](double x, int order) { return std::abs(pdf_asym(p, x, TailSide::upper, order) / exact::pdf(p, x) - 1.0); };
    // Higher orders can cross zero at moderate x, so only the leading order is
    // required to decay monotonically; order 2 must beat it far out.
    double prev = INFINITY;
    for (double x : {10.0, 20.0, 40.0, 80.0}) {
      CHECK(err(x, 0) < prev);
      prev = err(x, 0);
    }
    CHECK(err(80.0, 2) < err(80.0, 0));
    CHECK(err(80.0, 2) < 1e-3);
  }
  const auto p = make(1, 1, 0, 1);
  const exact::Distribution d(p);
  const double x = 30.0;
  CHECK(std::abs(tail_asym(p, x, TailSide::upper, 2) / d.tail(x) - 1.0) < 0.02);
  CHECK(std::abs(tail_asym(p, -x, TailSide::lower, 2) / d.cdf(-x) - 1.0) < 0.05);
}

TEST_CASE("orders, sides and regimes are checked") {
  const auto p = make(1, -1, -0.5, 1);
  CHECK(kind_of([&] { (void)tail_asym(p, -1.0, TailSide::upper, 2); }) == ErrorKind::domain);
  CHECK(kind_of([&] { (void)pdf_asym(p, 1.0, TailSide::lower, 2); }) == ErrorKind::domain);
  CHECK(kind_of([&] { (void)pdf_asym(p, 1.0, TailSide::upper, -1); }) == ErrorKind::parameter);
  CHECK(kind_of([&] { (void)pdf_asym(p, 1.0, TailSide::upper, kMaxExpansionOrder + 1); }) == ErrorKind::parameter);
  CHECK(kind_of([&] { (void)quantile_asym(p, 1.0); }) == ErrorKind::domain);
  CHECK(quantile_asym(p, 0.5).valid == false);  // ln 2 < 1
  CHECK(quantile_asym(p, 0.99).valid);
}

TEST_CASE("reference anchors") {
  // Density, (1, -1, -0.5), x = 2.5, orders 0, 1, 2: 4.4E-02, -8.4E-03, 2.9E-03.
  const auto p = make(1, -1, -0.5, 1);
  const double f = exact::pdf(p, 2.5);
  CHECK(pdf_asym(p, 2.5, TailSide::upper, 0) / f - 1.0 == doctest::Approx(4.4e-2).epsilon(0.03));
  CHECK(pdf_asym(p, 2.5, TailSide::upper, 1) / f - 1.0 == doctest::Approx(-8.4e-3).epsilon(0.03));
  CHECK(pdf_asym(p, 2.5, TailSide::upper, 2) / f - 1.0 == doctest::Approx(2.9e-3).epsilon(0.03));
  // Quantile, (1, 1, 0, 5), p = 0.99: -2.9E-01.
  const auto q = make(1, 1, 0, 5);
  const double truth = exact::quantile_numeric(q, 0.99);
  CHECK(quantile_asym(q, 0.99).value / truth - 1.0 == doctest::Approx(-0.29).epsilon(0.03));
}
