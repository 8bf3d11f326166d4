#include "prodnorm/puiseux.hpp"

#include "prodnorm/error.hpp"
#include "prodnorm/specfun.hpp"

namespace prodnorm::asym {

namespace {

// Polynomial in u, coefficient of u^i at index i.
using Poly = std::vector<double>;

void add_scaled(Poly& acc, const Poly& p, double c, int shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += c * p[i];
}

}  // namespace

double PuiseuxTable::at(int i, int j) const {
  if (j < 0 || j > max_j || i < 0 || i > j || 2 * i < j) return 0.0;
  return g[i][j];
}

// With t = y^{1/2}, the exponent is E(t) = sum_{m>=1} b C(1/2, m) u^m t^{2m-1}.
// F = exp(E) follows from F' = E' F, i.e. j F_j = sum_k k E_k F_{j-k}, and
// the binomial factor (1 + u t^2)^a is multiplied in at the end.
PuiseuxTable puiseux_g(double a, double b, int max_j) {
  if (max_j < 0 || max_j > kMaxPuiseuxOrder)
    fail(ErrorKind::parameter, "puiseux_g: max_j must lie in [0, 40]");

  std::vector<Poly> e(max_j + 1);
  for (int k = 1; k <= max_j; k += 2) {
    const int m = (k + 1) / 2;
    e[k].assign(m + 1, 0.0);
    e[k][m] = b * specfun::gen_binom(0.5, m);
  }

  std::vector<Poly> f(max_j + 1);
  f[0] = {1.0};
  for (int j = 1; j <= max_j; ++j) {
    Poly acc(j + 1, 0.0);
    for (int k = 1; k <= j; k += 2) {
      const Poly& ek = e[k];
      const Poly& fr = f[j - k];
      for (std::size_t p = 0; p < ek.size(); ++p) {
        if (ek[p] == 0.0) continue;
        for (std::size_t q = 0; q < fr.size(); ++q) acc[p + q] += k * ek[p] * fr[q] / j;
      }
    }
    f[j] = std::move(acc);
  }

  PuiseuxTable t;
  t.a = a;
  t.b = b;
  t.max_j = max_j;
  t.g.assign(max_j + 1, std::vector<double>(max_j + 1, 0.0));
  for (int j = 0; j <= max_j; ++j) {
    Poly gj;
    for (int i = 0; 2 * i <= j; ++i) add_scaled(gj, f[j - 2 * i], specfun::gen_binom(a, i), i);
    for (int i = 0; i < static_cast<int>(gj.size()) && i <= j; ++i) t.g[i][j] = gj[i];
  }
  return t;
}

}  // namespace prodnorm::asym
