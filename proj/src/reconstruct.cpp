#include "subdiff/reconstruct.hpp"

#include <cmath>
#include <stdexcept>

#include "subdiff/mlf.hpp"

namespace subdiff {

namespace {

struct ModeData {
  bool present = false;
  std::function<double(double)> h;
  double g = 0.0;
};

ModeData find_mode(const ProblemSpec& spec, int family, int index) {
  for (const auto& m : spec.modes)
    if (m.family == family && m.index == index) return {true, m.h_coeff, m.g_coeff};
  return {};
}

void check_node(const CollocationGrid& grid, int n) {
  if (n < 1 || n > grid.size())
    throw std::out_of_range("reconstruct: node index out of range");
}

// sum_m h^{m-1/2} sum_s w(t_{m,s}) [Psi^alpha(t_n, ., lam2, L_{m,s})]_{t_{m-1}}^{t_m}
double psi_history(const ProblemSpec& spec, const CollocationGrid& grid,
                   const PiecewiseLinear& sol, const std::function<double(double)>& h,
                   double lam2, int n) {
  const auto& nodes = grid.mesh.nodes;
  double tn = nodes[n];
  double sum = 0.0;
  for (int m = 1; m <= n; ++m) {
    double hm = h(grid.mesh.midpoint(m));
    if (hm == 0.0) continue;
    double inner = 0.0;
    for (int s = 1; s <= 2; ++s) {
      LinearPoly L = lagrange_poly(grid, m, s);
      double diff = psi(spec.alpha, tn, nodes[m], lam2, L) -
                    psi(spec.alpha, tn, nodes[m - 1], lam2, L);
      inner += sol.values[m - 1][s - 1] * diff;
    }
    sum += hm * inner;
  }
  return sum;
}

} // namespace

double coeff_u1(const ProblemSpec& spec, const CollocationGrid& grid,
                const PiecewiseLinear& sol, int i, int n) {
  check_node(grid, n);
  if (i < 1) throw std::out_of_range("coeff_u1: mode index must be >= 1");
  ModeData md = find_mode(spec, 1, i);
  double lambda = 2.0 * M_PI * i, lam2 = lambda * lambda;
  double tn = grid.mesh.nodes[n];
  double value = 0.0;
  if (md.present)
    value += psi_history(spec, grid, sol, md.h, lam2, n) / lam2;
  if (md.g != 0.0)
    value += md.g * theta(spec.alpha, spec.gamma_param, lam2, tn);
  return value;
}

double coeff_u10(const ProblemSpec& spec, const CollocationGrid& grid,
                 const PiecewiseLinear& sol, int n) {
  check_node(grid, n);
  const auto& nodes = grid.mesh.nodes;
  double a = spec.alpha;
  double tn = nodes[n];
  double sum = 0.0;
  for (int m = 1; m <= n; ++m) {
    double hm = spec.h10(grid.mesh.midpoint(m));
    if (hm == 0.0) continue;
    double inner = 0.0;
    for (int s = 1; s <= 2; ++s) {
      LinearPoly L = lagrange_poly(grid, m, s);
      double nu = (s == 1) ? -1.0 / grid.zeta[m - 1] : 1.0 / grid.zeta[m - 1];
      auto bracket = [&](double tau) {
        double u = tn - tau;
        return L(tau) * detail::omega0(a + 1.0, u) + nu * detail::omega0(a + 2.0, u);
      };
      // bracket is an antiderivative of -L(tau) omega_alpha(t_n - tau)
      inner += sol.values[m - 1][s - 1] * (bracket(nodes[m - 1]) - bracket(nodes[m]));
    }
    sum += hm * inner;
  }
  double value = sum;
  if (spec.g10 != 0.0) value += spec.g10 * omega(spec.gamma_param, tn);
  return value;
}

double coeff_u2(const ProblemSpec& spec, const CollocationGrid& grid,
                const PiecewiseLinear& sol, int i, int n) {
  check_node(grid, n);
  if (i < 1) throw std::out_of_range("coeff_u2: mode index must be >= 1");
  ModeData m2 = find_mode(spec, 2, i);
  ModeData m1 = find_mode(spec, 1, i);
  double lambda = 2.0 * M_PI * i, lam2 = lambda * lambda;
  const auto& nodes = grid.mesh.nodes;
  double a = spec.alpha;
  double tn = nodes[n];

  double value = 0.0;
  if (m2.present)
    value += psi_history(spec, grid, sol, m2.h, lam2, n) / lam2;
  if (m2.g != 0.0)
    value += m2.g * theta(spec.alpha, spec.gamma_param, lam2, tn);

  // coupling from the family-1 partner: - 2 lambda [sum h1 w T + g1 Prabhakar]
  double coupling = 0.0;
  if (m1.present) {
    for (int m = 1; m <= n; ++m) {
      double hm = m1.h(grid.mesh.midpoint(m));
      if (hm == 0.0) continue;
      double inner = 0.0;
      for (int s = 1; s <= 2; ++s) {
        LinearPoly L = lagrange_poly(grid, m, s);
        double nu = (s == 1) ? -1.0 / grid.zeta[m - 1] : 1.0 / grid.zeta[m - 1];
        auto bracket = [&](double tau) {
          double u = tn - tau;
          if (u == 0.0) return 0.0;
          double arg = -lam2 * std::pow(u, a);
          return -L(tau) * std::pow(u, 2.0 * a) *
                     detail::ml_impl(a, 2.0 * a + 1.0, 2, arg) -
                 nu * std::pow(u, 2.0 * a + 1.0) *
                     detail::ml_impl(a, 2.0 * a + 2.0, 2, arg);
        };
        inner += sol.values[m - 1][s - 1] * (bracket(nodes[m]) - bracket(nodes[m - 1]));
      }
      coupling += hm * inner;
    }
  }
  if (m1.g != 0.0) {
    double arg = -lam2 * std::pow(tn, a);
    coupling += m1.g * std::pow(tn, a + spec.gamma_param - 1.0) *
                detail::ml_impl(a, a + spec.gamma_param, 2, arg);
  }
  return value - 2.0 * lambda * coupling;
}

CoefficientTable build_table(const ProblemSpec& spec, const CollocationGrid& grid,
                             const PiecewiseLinear& sol) {
  int N = grid.size();
  CoefficientTable table;
  table.times.assign(grid.mesh.nodes.begin() + 1, grid.mesh.nodes.end());
  table.u10.resize(N);
  for (int n = 1; n <= N; ++n) table.u10[n - 1] = coeff_u10(spec, grid, sol, n);
  for (const auto& m : spec.modes) {
    if (m.family == 1 && !table.u1.count(m.index)) {
      auto& col = table.u1[m.index];
      col.resize(N);
      for (int n = 1; n <= N; ++n) col[n - 1] = coeff_u1(spec, grid, sol, m.index, n);
    }
    if (m.family == 2 && !table.u2.count(m.index)) {
      auto& col = table.u2[m.index];
      col.resize(N);
      for (int n = 1; n <= N; ++n) col[n - 1] = coeff_u2(spec, grid, sol, m.index, n);
    }
  }
  return table;
}

double eval_u(const CoefficientTable& table, double x, int n) {
  if (n < 1 || n > static_cast<int>(table.times.size()))
    throw std::out_of_range("eval_u: node index out of range");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("eval_u: x must be in [0,1]");
  double value = 2.0 * table.u10[n - 1];
  for (const auto& [i, col] : table.u1)
    value += 4.0 * (1.0 - x) * std::sin(2.0 * M_PI * i * x) * col[n - 1];
  for (const auto& [i, col] : table.u2)
    value += 4.0 * std::cos(2.0 * M_PI * i * x) * col[n - 1];
  return value;
}

} // namespace subdiff
