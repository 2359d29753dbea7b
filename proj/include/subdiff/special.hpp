#pragma once

namespace subdiff {

/// Gamma function for real arguments (Lanczos approximation with reflection
/// for x < 1/2). Throws std::domain_error at the poles x = 0, -1, -2, ...
double gamma_fn(double x);

/// Reciprocal gamma 1/Gamma(x); returns exactly 0 at the poles of Gamma.
double rgamma(double x);

/// sin(pi*x) with exact zeros at integer x (argument reduction modulo 2).
double sin_pi(double x);

} // namespace subdiff
