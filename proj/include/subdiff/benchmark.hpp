#pragma once

#include "subdiff/problem.hpp"

namespace subdiff::benchmark {

/// Closed-form test problem: h, g, q chosen so that w and all nonzero
/// Fourier coefficients of u are known explicitly.
struct BenchmarkCase {
  double alpha;
  double gamma_param;
  double lambda1; // 2*pi
  double lambda2; // 4*pi
  double k1;      // 1/(lambda1^2 - 1)
  double k2;      // lambda1^2 * k1

  BenchmarkCase(double a, double g);
};

/// ProblemSpec carrying the benchmark data (fed through the generic modules;
/// nothing downstream special-cases it).
ProblemSpec make_problem(double alpha, double gamma_param);

/// w(t) = [lambda1^2 - E_alpha((1-lambda1^2) t^alpha)] / (lambda1^2 - 1).
double exact_w(const BenchmarkCase& c, double t);

struct ExactCoeffs {
  double u10, u11, u21, u22;
};

/// The four nonzero coefficients of u at time t, via the closed-form
/// Mittag-Leffler / Prabhakar combinations.
ExactCoeffs exact_u_coeffs(const BenchmarkCase& c, double t);

/// u(x,t) assembled from the exact coefficients.
double exact_u(const BenchmarkCase& c, double x, double t);

namespace detail {
// Convolutions behind exact_u_coeffs, exposed for oracle cross-checks.
double conv_w_theta(const BenchmarkCase& c, int i, double t);  // (w * Theta^alpha_i)(t), i >= 0
double conv_w_theta_shortcut(const BenchmarkCase& c, int i, double t); // i >= 1 variant
double conv_tw_theta1(const BenchmarkCase& c, double t);       // (t w * Theta^alpha_1)(t)
double conv_w_prabhakar(const BenchmarkCase& c, double t);     // w * (t^{2a-1} E^2_{a,2a}(-l1^2 t^a))
} // namespace detail

} // namespace subdiff::benchmark
