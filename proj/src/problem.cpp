#include "subdiff/problem.hpp"

#include <cmath>
#include <stdexcept>

#include "subdiff/mlf.hpp"

namespace subdiff {

FourierMode make_mode(int family, int index, std::function<double(double)> h_coeff,
                      double g_coeff) {
  if (family != 1 && family != 2)
    throw std::invalid_argument("make_mode: family must be 1 or 2");
  if (index < 1) throw std::invalid_argument("make_mode: index must be >= 1");
  FourierMode m;
  m.family = family;
  m.index = index;
  m.lambda = 2.0 * M_PI * index;
  m.h_coeff = std::move(h_coeff);
  m.g_coeff = g_coeff;
  return m;
}

void ProblemSpec::validate() const {
  if (!(alpha > 0.0 && alpha <= gamma_param && gamma_param <= 1.0))
    throw std::invalid_argument("ProblemSpec: need 0 < alpha <= gamma <= 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("ProblemSpec: horizon must be > 0");
  if (!h10 || !dq_frac)
    throw std::invalid_argument("ProblemSpec: h10 and dq_frac must be set");
  for (const auto& m : modes) {
    if (m.family != 1 && m.family != 2)
      throw std::invalid_argument("ProblemSpec: mode family must be 1 or 2");
    if (m.index < 1) throw std::invalid_argument("ProblemSpec: mode index must be >= 1");
    if (m.lambda != 2.0 * M_PI * m.index)
      throw std::invalid_argument("ProblemSpec: mode lambda must equal 2*pi*index");
    if (!m.h_coeff) throw std::invalid_argument("ProblemSpec: mode h_coeff must be set");
  }
}

double psi(double alpha, double t, double tau, double lambda, const LinearPoly& line) {
  if (tau > t) throw std::domain_error("psi: tau must be <= t");
  if (!(lambda > 0.0)) throw std::domain_error("psi: lambda must be > 0");
  double u = t - tau;
  if (u == 0.0) return line(t);
  double arg = -lambda * std::pow(u, alpha);
  return detail::ml_impl(alpha, 1.0, 1, arg) * line(tau) +
         line.slope * u * detail::ml_impl(alpha, 2.0, 1, arg);
}

double a_coeff(const ProblemSpec& spec, const CollocationGrid& grid, int m, int s,
               double t_target) {
  if (m < 1 || m > grid.size() || (s != 1 && s != 2))
    throw std::out_of_range("a_coeff: index out of range");
  double lower = grid.mesh.nodes[m - 1];
  if (!(t_target > lower))
    throw std::domain_error("a_coeff: t_target must exceed t_{m-1}");
  double upper = std::min(t_target, grid.mesh.nodes[m]);
  double mid = grid.mesh.midpoint(m);
  LinearPoly L = lagrange_poly(grid, m, s);
  double sum = 0.0;
  for (const auto& mode : spec.modes) {
    if (mode.family != 1) continue;
    double lam2 = mode.lambda * mode.lambda;
    double diff = psi(spec.alpha, t_target, upper, lam2, L) -
                  psi(spec.alpha, t_target, lower, lam2, L);
    sum += mode.h_coeff(mid) / mode.lambda * diff;
  }
  return 4.0 * sum;
}

double g_eval(const ProblemSpec& spec, double t) {
  if (!(t > 0.0)) throw std::domain_error("g_eval: t must be > 0");
  double sum = spec.dq_frac(t);
  for (const auto& mode : spec.modes) {
    if (mode.family != 1 || mode.g_coeff == 0.0) continue;
    sum += 4.0 * mode.lambda * mode.g_coeff *
           theta(spec.alpha, spec.gamma_param, mode.lambda * mode.lambda, t);
  }
  return sum;
}

double h_eval(const ProblemSpec& spec, double t) {
  // integral of phi_10 is 2, of phi_{1i} is 2/(pi i); cosine modes drop out
  double sum = 2.0 * spec.h10(t);
  for (const auto& mode : spec.modes) {
    if (mode.family != 1) continue;
    sum += 2.0 / (M_PI * mode.index) * mode.h_coeff(t);
  }
  return sum;
}

double kernel_eval(const ProblemSpec& spec, double t, double tau) {
  if (!(tau < t)) throw std::domain_error("kernel_eval: need tau < t");
  double sum = 0.0;
  for (const auto& mode : spec.modes) {
    if (mode.family != 1) continue;
    sum += 4.0 * mode.lambda * mode.h_coeff(tau) *
           theta(spec.alpha, spec.alpha, mode.lambda * mode.lambda, t - tau);
  }
  return sum;
}

} // namespace subdiff
