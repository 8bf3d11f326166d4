#pragma once

// Adaptive Gauss-Kronrod quadrature on finite intervals and on [a, inf).
//
// The finite-interval driver is a globally adaptive 10/21-point scheme in
// the style of QUADPACK's QAG: the panel with the largest error estimate is
// bisected until the summed error meets the requested tolerance. The
// semi-infinite driver walks outward over panels of doubling width and
// stops once a panel's contribution is negligible and shrinking.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace prodnorm::quad {

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_subdivisions = 4000;
  int max_panels = 1100;  ///< semi-infinite driver only
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

namespace detail {

inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077582254432183, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  if (!std::isfinite(value)) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err};
}

}  // namespace detail

/// Integrates f over [a, b].
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
  Result out;
  if (a == b) return out;
  const double rel = std::max(opt.rel_tol, 100.0 * std::numeric_limits<double>::epsilon());

  std::priority_queue<detail::Panel> heap;
  auto first = detail::gk21(f, a, b);
  out.evaluations = 21;
  heap.push(first);
  double total = first.value;
  double total_err = first.error;

  int splits = 0;
  while (total_err > std::max(opt.abs_tol, rel * std::abs(total))) {
    if (splits >= opt.max_subdivisions || !std::isfinite(total)) {
      out.converged = false;
      break;
    }
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Stop refining once panels collapse to adjacent doubles.
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      out.converged = false;
      break;
    }
    heap.pop();
    auto left = detail::gk21(f, worst.a, mid);
    auto right = detail::gk21(f, mid, worst.b);
    out.evaluations += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
    // Keep the running error honest against cancellation drift.
    if (splits % 64 == 0) {
      std::vector<detail::Panel> all;
      all.reserve(heap.size());
      total = total_err = 0.0;
      while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
      }
      for (auto& p : all) {
        total += p.value;
        total_err += p.error;
        heap.push(p);
      }
    }
  }
  out.value = total;
  out.error = total_err;
  return out;
}

/// Integrates f over [a, inf). `scale` is the width of the first panel and
/// should be of the order of the integrand's characteristic length.
template <class F>
Result integrate_to_infinity(F&& f, double a, double scale, const Options& opt = {}) {
  Result out;
  double left = a;
  double width = scale;
  double previous = std::numeric_limits<double>::infinity();
  int negligible_streak = 0;
  for (int panel = 0; panel < opt.max_panels; ++panel) {
    const double right = left + width;
    if (!std::isfinite(right)) break;
    auto piece = integrate(f, left, right, opt);
    out.value += piece.value;
    out.error += piece.error;
    out.evaluations += piece.evaluations;
    out.converged = out.converged && piece.converged;

    const double mag = std::abs(piece.value);
    const bool tiny = mag <= 1e-3 * opt.rel_tol * std::abs(out.value) ||
                      (mag == 0.0 && out.value != 0.0);
    if (tiny && mag <= previous) {
      if (++negligible_streak >= 2) return out;
    } else {
      negligible_streak = 0;
    }
    previous = mag;
    left = right;
    width *= 2.0;
  }
  // An all-zero integrand is a legitimate (converged) zero.
  out.converged = out.converged && out.value == 0.0;
  return out;
}

}  // namespace prodnorm::quad
