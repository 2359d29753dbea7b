#include "subdiff/special.hpp"

#include <cmath>
#include <stdexcept>

namespace subdiff {

namespace {

// Lanczos g = 7, 9 coefficients; relative accuracy a few 1e-15 on the
// positive axis.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSqrtTwoPi = 2.5066282746310002;

double lanczos_positive(double x) {
  // x >= 0.5
  double y = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (y + i);
  double base = y + 7.5;
  return kSqrtTwoPi * std::pow(base, y + 0.5) * std::exp(-base) * acc;
}

} // namespace

double sin_pi(double x) {
  double r = std::remainder(x, 2.0); // x - r is an even integer, r in [-1,1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(M_PI * r);
}

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (x >= 0.5) return lanczos_positive(x);
  double s = sin_pi(x);
  if (s == 0.0) throw std::domain_error("gamma_fn: pole at non-positive integer argument");
  return M_PI / (s * lanczos_positive(1.0 - x));
}

double rgamma(double x) {
  if (std::isnan(x)) return x;
  if (x >= 0.5) {
    if (x > 178.0) return 0.0; // Gamma overflows
    return 1.0 / lanczos_positive(x);
  }
  double s = sin_pi(x);
  if (s == 0.0) return 0.0;
  return s * lanczos_positive(1.0 - x) / M_PI;
}

} // namespace subdiff
