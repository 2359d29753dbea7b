#pragma once

#include <array>
#include <vector>

namespace subdiff {

/// Graded time mesh t_n = (n/N)^delta * T, n = 0..N.
struct GradedMesh {
  int capital_n = 0;   // number of subintervals N
  double delta = 1.0;  // grading exponent, >= 1
  double horizon = 1.0; // final time T
  std::vector<double> nodes; // N+1 nodes, nodes[0] = 0, nodes[N] = T

  double dt(int n) const { return nodes[n] - nodes[n - 1]; } // n in 1..N
  double midpoint(int n) const { return 0.5 * (nodes[n] + nodes[n - 1]); }
  double max_dt() const;
};

GradedMesh build_graded(int capital_n, double delta, double horizon);

/// A linear polynomial L(t) = slope*t + intercept.
struct LinearPoly {
  double slope = 0.0;
  double intercept = 0.0;
  double operator()(double t) const { return slope * t + intercept; }
};

/// Two collocation points per interval, t_{n,j} = t_{n-1} + xi_j * dt_n.
struct CollocationGrid {
  GradedMesh mesh;
  double xi1 = 0.0, xi2 = 0.0;
  std::vector<std::array<double, 2>> points; // [n-1][j-1]
  std::vector<double> zeta;                  // zeta_n = t_{n,2} - t_{n,1}

  int size() const { return mesh.capital_n; }
  double point(int n, int j) const { return points[n - 1][j - 1]; }
};

/// Default collocation parameters: the 2-point Gauss quadrature points.
inline constexpr double kGaussXi1 = 0.21132486540518711775; // (3-sqrt(3))/6
inline constexpr double kGaussXi2 = 0.78867513459481288225; // (3+sqrt(3))/6

CollocationGrid collocation_points(const GradedMesh& mesh,
                                   double xi1 = kGaussXi1,
                                   double xi2 = kGaussXi2);

/// Local Lagrange basis L_{n,j} on interval I_n as a linear polynomial.
LinearPoly lagrange_poly(const CollocationGrid& grid, int n, int j);

/// Evaluate L_{n,j}(t) for t in the closure of I_n.
double lagrange(const CollocationGrid& grid, int n, int j, double t);

/// Error-measurement grid: collocation points, interval midpoints and right
/// nodes, deduplicated and ascending.  Excludes t = 0.
std::vector<double> fine_grid(const CollocationGrid& grid);

} // namespace subdiff
