#include "subdiff/benchmark.hpp"

#include <cmath>
#include <stdexcept>

#include "subdiff/mlf.hpp"

namespace subdiff::benchmark {

BenchmarkCase::BenchmarkCase(double a, double g)
    : alpha(a), gamma_param(g), lambda1(2.0 * M_PI), lambda2(4.0 * M_PI) {
  if (!(alpha > 0.0 && alpha <= gamma_param && gamma_param <= 1.0))
    throw std::domain_error("BenchmarkCase: need 0 < alpha <= gamma <= 1");
  k1 = 1.0 / (lambda1 * lambda1 - 1.0);
  k2 = lambda1 * lambda1 * k1;
}

ProblemSpec make_problem(double alpha, double gamma_param) {
  BenchmarkCase c(alpha, gamma_param);
  double l1 = c.lambda1;
  double b = l1 * l1 - 1.0;
  ProblemSpec spec;
  spec.alpha = alpha;
  spec.gamma_param = gamma_param;
  spec.horizon = 1.0;
  spec.h10 = [h = b / (2.0 * l1 * l1)](double) { return h; };
  spec.g10 = 0.0;
  spec.dq_frac = [](double) { return 1.0; }; // D^{alpha,gamma} q = 1 for q = omega_{1+alpha}
  spec.sigma = alpha;
  spec.modes.push_back(make_mode(1, 1, [h = 1.0 / (4.0 * l1)](double) { return h; }, 0.0));
  spec.modes.push_back(make_mode(2, 1, [](double t) { return t; }, 0.0));
  spec.modes.push_back(make_mode(2, 2, [](double) { return 2.0; }, 1.0));
  spec.validate();
  return spec;
}

double exact_w(const BenchmarkCase& c, double t) {
  if (!(t >= 0.0)) throw std::domain_error("exact_w: t must be >= 0");
  double b = c.lambda1 * c.lambda1 - 1.0;
  if (t == 0.0) return 1.0;
  double e = subdiff::detail::ml_impl(c.alpha, 1.0, 1, -b * std::pow(t, c.alpha));
  return c.k2 - c.k1 * e;
}

namespace detail {

using subdiff::detail::ml_impl;

double conv_w_theta(const BenchmarkCase& c, int i, double t) {
  double a = c.alpha;
  double l1sq = c.lambda1 * c.lambda1;
  double b = l1sq - 1.0;
  double lisq = std::pow(2.0 * M_PI * i, 2); // lambda_0 = 0
  double d = lisq - l1sq + 1.0;
  double ta = std::pow(t, a);
  double v = ml_impl(a, 1.0, 1, -b * ta) + l1sq * ta * ml_impl(a, a + 1.0, 1, -b * ta) -
             ml_impl(a, 1.0, 1, -lisq * ta) - l1sq * ta * ml_impl(a, a + 1.0, 1, -lisq * ta);
  return v / d;
}

double conv_w_theta_shortcut(const BenchmarkCase& c, int i, double t) {
  if (i < 1) throw std::domain_error("conv_w_theta_shortcut: i >= 1");
  double a = c.alpha;
  double l1sq = c.lambda1 * c.lambda1;
  double b = l1sq - 1.0;
  double lisq = std::pow(2.0 * M_PI * i, 2);
  double d = lisq - l1sq + 1.0;
  double ta = std::pow(t, a);
  double v = -c.k1 * ml_impl(a, 1.0, 1, -b * ta) +
             (l1sq - lisq) / lisq * ml_impl(a, 1.0, 1, -lisq * ta) + c.k2 - l1sq / lisq;
  return v / d;
}

double conv_tw_theta1(const BenchmarkCase& c, double t) {
  double a = c.alpha;
  double l1sq = c.lambda1 * c.lambda1;
  double b = l1sq - 1.0;
  double ta = std::pow(t, a);
  double za = -l1sq * ta, zb = -b * ta;
  double v = c.k2 * std::pow(t, 1.0 + a) * ml_impl(a, 2.0 + a, 1, za);
  v += (a - 1.0) * (t * ml_impl(a, 2.0, 1, za) - t * ml_impl(a, 2.0, 1, zb) +
                    std::pow(t, a + 1.0) * ml_impl(a, 2.0 + a, 2, zb));
  v -= c.k1 * (std::pow(t, 1.0 - a) * ml_impl(a, 2.0 - a, 1, za) -
               std::pow(t, 1.0 - a) * ml_impl(a, 2.0 - a, 1, zb) +
               t * ml_impl(a, 2.0, 2, zb));
  return v;
}

double conv_w_prabhakar(const BenchmarkCase& c, double t) {
  double a = c.alpha;
  double l1sq = c.lambda1 * c.lambda1;
  double b = l1sq - 1.0;
  double ta = std::pow(t, a);
  double za = -l1sq * ta, zb = -b * ta;
  return c.k1 * (l1sq * std::pow(t, 2.0 * a) * ml_impl(a, 2.0 * a + 1.0, 2, za) +
                 ml_impl(a, 1.0, 1, za) + ta * ml_impl(a, 1.0 + a, 2, za) -
                 ml_impl(a, 1.0, 1, zb));
}

} // namespace detail

ExactCoeffs exact_u_coeffs(const BenchmarkCase& c, double t) {
  if (!(t > 0.0)) throw std::domain_error("exact_u_coeffs: t must be > 0");
  double l1sq = c.lambda1 * c.lambda1;
  double h10 = (l1sq - 1.0) / (2.0 * l1sq);
  double h11 = 1.0 / (4.0 * c.lambda1);
  ExactCoeffs out;
  out.u10 = h10 * detail::conv_w_theta(c, 0, t);
  out.u11 = h11 * detail::conv_w_theta(c, 1, t);
  out.u21 = detail::conv_tw_theta1(c, t) - 0.5 * detail::conv_w_prabhakar(c, t);
  out.u22 = 2.0 * detail::conv_w_theta(c, 2, t) +
            theta(c.alpha, c.gamma_param, c.lambda2 * c.lambda2, t);
  return out;
}

double exact_u(const BenchmarkCase& c, double x, double t) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("exact_u: x must be in [0,1]");
  ExactCoeffs uc = exact_u_coeffs(c, t);
  return 2.0 * uc.u10 + 4.0 * (1.0 - x) * std::sin(c.lambda1 * x) * uc.u11 +
         4.0 * std::cos(c.lambda1 * x) * uc.u21 + 4.0 * std::cos(c.lambda2 * x) * uc.u22;
}

} // namespace subdiff::benchmark
