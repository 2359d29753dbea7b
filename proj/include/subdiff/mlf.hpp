#pragma once

#include <stdexcept>

namespace subdiff {

/// Raised when no evaluation regime can certify the target accuracy.
struct eval_accuracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameter triple of the generalized (Prabhakar) Mittag-Leffler function
/// E^rho_{alpha,beta}.  Validates 0 < alpha <= 1, beta > 0, rho in {1,2}.
struct MlParams {
  double alpha;
  double beta;
  int rho = 1;
  MlParams(double a, double b, int r = 1);
};

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for z <= 0,
/// 0 < alpha <= 1, beta > 0.  Relative accuracy ~1e-12 (absolute ~1e-13
/// near zeros of the function).
double ml(double alpha, double beta, double z);

/// Prabhakar function E^rho_{alpha,beta}(z) for z <= 0 and rho in {1,2}.
/// Relative accuracy ~1e-11 for rho = 2.
double ml_prabhakar(double alpha, double beta, int rho, double z);

/// Theta kernel  Theta^gamma(t) = t^{gamma-1} E_{alpha,gamma}(-lambda_sq t^alpha),
/// finite for every t > 0 (diverges like t^{gamma-1} as t -> 0+ when gamma < 1).
double theta(double alpha, double gamma_param, double lambda_sq, double t);

/// Power kernel omega_mu(t) = t^{mu-1} / Gamma(mu), mu > 0, t > 0.
double omega(double mu, double t);

namespace detail {
// Unvalidated core used internally: any real beta, rho >= 1, z <= 0.
double ml_impl(double alpha, double beta, int rho, double z);
// omega_mu extended to t = 0 (requires mu > 1 there); used by reconstruction.
double omega0(double mu, double t);
} // namespace detail

} // namespace subdiff
