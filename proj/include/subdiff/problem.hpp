#pragma once

#include <functional>
#include <vector>

#include "subdiff/mesh.hpp"

namespace subdiff {

/// One Fourier mode (k,i) of the data, k = family in {1,2}, i >= 1,
/// lambda = 2*pi*i.  Family-1 modes drive the Volterra kernel; family-2
/// modes enter only the reconstruction of u.
struct FourierMode {
  int family = 1;
  int index = 1;
  double lambda = 0.0;
  std::function<double(double)> h_coeff; // h_{ki}(t)
  double g_coeff = 0.0;                  // g_{ki}
};

FourierMode make_mode(int family, int index,
                      std::function<double(double)> h_coeff,
                      double g_coeff = 0.0);

/// Data of the inverse source problem in series form.
struct ProblemSpec {
  double alpha = 0.5;
  double gamma_param = 1.0; // alpha <= gamma <= 1
  double horizon = 1.0;
  std::vector<FourierMode> modes;
  std::function<double(double)> h10;     // coefficient of phi_10
  double g10 = 0.0;
  std::function<double(double)> dq_frac; // D^{alpha,gamma} q(t), closed form
  double sigma = 1.0;                    // regularity exponent, metadata only

  void validate() const;
};

/// Antiderivative bracket of Lemma-type integrals:
///   Psi^alpha(t,tau,lambda,L) = E_alpha(-lambda u^alpha) L(tau)
///                             + nu * u * E_{alpha,2}(-lambda u^alpha),
/// u = t - tau, L(tau) = nu*tau + c.  At tau = t it reduces to L(t).
double psi(double alpha, double t, double tau, double lambda,
           const LinearPoly& line);

/// Weight a_{m,s}(t) = 4 sum_i h_{1i}^{m-1/2} / lambda_i *
///   [Psi^alpha(t, ., lambda_i^2, L_{m,s})] from t_{m-1} to min(t, t_m).
double a_coeff(const ProblemSpec& spec, const CollocationGrid& grid,
               int m, int s, double t_target);

/// Right-hand side G(t) = dq_frac(t) + 4 sum lambda_i g_{1i} Theta^gamma_i(t).
double g_eval(const ProblemSpec& spec, double t);

/// H(t) = integral of h(x,t) over [0,1] expressed through the series data:
/// H = 2 h10(t) + sum_{family 1} (2/(pi i)) h_{1i}(t) (cosine modes drop out).
double h_eval(const ProblemSpec& spec, double t);

/// Kernel E(t,tau) = 4 sum lambda_i h_{1i}(tau) Theta^alpha_i(t - tau).
/// Diagnostic only; the solver integrates E exactly through a_coeff.
double kernel_eval(const ProblemSpec& spec, double t, double tau);

} // namespace subdiff
