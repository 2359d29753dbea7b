#include "subdiff/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subdiff {

double GradedMesh::max_dt() const {
  double m = 0.0;
  for (int n = 1; n <= capital_n; ++n) m = std::max(m, dt(n));
  return m;
}

GradedMesh build_graded(int capital_n, double delta, double horizon) {
  if (capital_n < 1) throw std::invalid_argument("build_graded: N must be >= 1");
  if (!(delta >= 1.0)) throw std::invalid_argument("build_graded: delta must be >= 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("build_graded: T must be > 0");
  GradedMesh mesh;
  mesh.capital_n = capital_n;
  mesh.delta = delta;
  mesh.horizon = horizon;
  mesh.nodes.resize(capital_n + 1);
  for (int n = 0; n <= capital_n; ++n)
    mesh.nodes[n] = std::pow(static_cast<double>(n) / capital_n, delta) * horizon;
  mesh.nodes[0] = 0.0;
  mesh.nodes[capital_n] = horizon;
  return mesh;
}

CollocationGrid collocation_points(const GradedMesh& mesh, double xi1, double xi2) {
  if (!(0.0 < xi1 && xi1 < xi2 && xi2 < 1.0))
    throw std::invalid_argument("collocation_points: need 0 < xi1 < xi2 < 1");
  CollocationGrid grid;
  grid.mesh = mesh;
  grid.xi1 = xi1;
  grid.xi2 = xi2;
  int N = mesh.capital_n;
  grid.points.resize(N);
  grid.zeta.resize(N);
  for (int n = 1; n <= N; ++n) {
    double left = mesh.nodes[n - 1], dt = mesh.dt(n);
    grid.points[n - 1] = {left + xi1 * dt, left + xi2 * dt};
    grid.zeta[n - 1] = grid.points[n - 1][1] - grid.points[n - 1][0];
  }
  return grid;
}

LinearPoly lagrange_poly(const CollocationGrid& grid, int n, int j) {
  if (n < 1 || n > grid.size() || (j != 1 && j != 2))
    throw std::out_of_range("lagrange_poly: index out of range");
  double z = grid.zeta[n - 1];
  if (j == 1) return {-1.0 / z, grid.point(n, 2) / z}; // (t_{n,2} - t)/zeta
  return {1.0 / z, -grid.point(n, 1) / z};             // (t - t_{n,1})/zeta
}

double lagrange(const CollocationGrid& grid, int n, int j, double t) {
  if (n < 1 || n > grid.size() || (j != 1 && j != 2))
    throw std::out_of_range("lagrange: index out of range");
  if (t < grid.mesh.nodes[n - 1] || t > grid.mesh.nodes[n])
    throw std::out_of_range("lagrange: t outside closure of I_n");
  return lagrange_poly(grid, n, j)(t);
}

std::vector<double> fine_grid(const CollocationGrid& grid) {
  std::vector<double> pts;
  int N = grid.size();
  pts.reserve(4 * static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    pts.push_back(grid.point(n, 1));
    pts.push_back(grid.point(n, 2));
    pts.push_back(grid.mesh.midpoint(n));
    pts.push_back(grid.mesh.nodes[n]);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

} // namespace subdiff
