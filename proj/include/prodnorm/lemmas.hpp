#pragma once

// Term-by-term integration of exponential-type expansions and asymptotic
// inversion of A x^m exp(-a x + b sqrt(x)) (1 + g(x)) = z.

#include <vector>

#include "prodnorm/coefficients.hpp"

namespace prodnorm::asym {

/// If g(t) ~ t^m e^{-a t + b sqrt t} sum_l u_l t^{-l/2}, then
///   int_x^inf g ~ (x^m / a) e^{-a x + b sqrt x} sum_p U_p x^{-p/2}.
/// Missing u_l are taken as zero.
std::vector<double> lemma1_U(const std::vector<double>& u, double a, double b, double m, int order);

/// If h(t) ~ t^m e^{-a t} sum_j v_j t^{-j}, then
///   int_x^inf h ~ (x^m / a) e^{-a x} sum_k V_k x^{-k}.
/// The corrected form uses (j-m)_{k-j}, the printed one (k-m)_{k-j}.
std::vector<double> lemma1_V(const std::vector<double>& v, double a, double m, int order,
                             Transcription form = Transcription::corrected);

/// U_p when b != 0, otherwise V_k with `u` read as the v_j.
CoefficientSet lemma1_coeffs(const std::vector<double>& u, double a, double b, double m, int order,
                             Transcription form = Transcription::corrected);

/// x^{-q} e^{a x - b sqrt x} int_x^inf t^q e^{-a t + b sqrt t} dt, by quadrature.
double tail_kernel_scaled(double a, double b, double q, double x);

enum class CorrectionOrder { half, one };  // g(x) = O(x^{-1/2}) or O(x^{-1})

struct AsymptoticInversionProblem {
  double a = 1.0;
  double b = 0.0;
  double m = 0.0;
  double A = 1.0;
  double z = 1e-8;
  CorrectionOrder g_order = CorrectionOrder::half;

  /// Throws Error(parameter) unless a > 0, A > 0 and 0 < z < A.
  void validate() const;
};

/// Six-term large-ln(1/z) approximation to the solution x. The printed
/// constant term b^2/(4a^2) should read b^2/(2a^2); `corrected` uses the
/// latter. Throws Error(regime) when ln(1/z) <= 1.
double asym_invert(const AsymptoticInversionProblem& problem,
                   Transcription form = Transcription::corrected);

/// Same formula with log A supplied directly and no regime check.
double asym_invert_log(double a, double b, double m, double log_A, double log_inv_z,
                       Transcription form);

}  // namespace prodnorm::asym
