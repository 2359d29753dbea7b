#include "subdiff/collocation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "subdiff/mlf.hpp"

namespace subdiff {

namespace {

struct Kernel1Mode {
  double lambda;
  const std::function<double(double)>* h;
};

std::vector<Kernel1Mode> kernel_modes(const ProblemSpec& spec) {
  std::vector<Kernel1Mode> out;
  for (const auto& m : spec.modes)
    if (m.family == 1) out.push_back({m.lambda, &m.h_coeff});
  return out;
}

// a_{m,s}(t) for all m = 1..n and s = 1,2 at the collocation target t.
// The Mittag-Leffler values E_alpha and E_{alpha,2} are shared across the
// two basis functions and across adjacent intervals (upper limit of I_m is
// the lower limit of I_{m+1}), so they are evaluated once per tau.
class RowAssembler {
public:
  RowAssembler(const ProblemSpec& spec, const CollocationGrid& grid)
      : spec_(spec), grid_(grid), modes_(kernel_modes(spec)) {
    int N = grid.size();
    hmid_.resize(modes_.size());
    for (std::size_t q = 0; q < modes_.size(); ++q) {
      hmid_[q].resize(N + 1);
      for (int m = 1; m <= N; ++m)
        hmid_[q][m] = (*modes_[q].h)(grid.mesh.midpoint(m));
    }
    e1_.resize(N + 1);
    e2_.resize(N + 1);
    row_.resize(N + 1);
  }

  // Fills a[m][s-1] for m = 1..n with a_{m,s}(t), t = t_{n,j}.
  const std::vector<std::array<double, 2>>& assemble(int n, double t) {
    for (int m = 1; m <= n; ++m) row_[m] = {0.0, 0.0};
    if (modes_.empty()) return row_;
    const auto& nodes = grid_.mesh.nodes;
    double a = spec_.alpha;
    for (std::size_t q = 0; q < modes_.size(); ++q) {
      double lam = modes_[q].lambda, lam2 = lam * lam;
      // tau grid: t_0 .. t_{n-1}, then the target t itself (index n)
      for (int m = 0; m < n; ++m) {
        double u = t - nodes[m];
        double arg = -lam2 * std::pow(u, a);
        e1_[m] = detail::ml_impl(a, 1.0, 1, arg);
        e2_[m] = detail::ml_impl(a, 2.0, 1, arg);
      }
      e1_[n] = 1.0;
      e2_[n] = 1.0;
      for (int m = 1; m <= n; ++m) {
        double coef = 4.0 * hmid_[q][m] / lam;
        int ui = (m < n) ? m : n; // tau index of min(t, t_m)
        double tau_u = (m < n) ? nodes[m] : t;
        double tau_l = nodes[m - 1];
        double uu = t - tau_u, ul = t - tau_l;
        for (int s = 1; s <= 2; ++s) {
          LinearPoly L = lagrange_poly(grid_, m, s);
          double psi_u = e1_[ui] * L(tau_u) + L.slope * uu * e2_[ui];
          double psi_l = e1_[m - 1] * L(tau_l) + L.slope * ul * e2_[m - 1];
          row_[m][s - 1] += coef * (psi_u - psi_l);
        }
      }
    }
    return row_;
  }

private:
  const ProblemSpec& spec_;
  const CollocationGrid& grid_;
  std::vector<Kernel1Mode> modes_;
  std::vector<std::vector<double>> hmid_;
  std::vector<double> e1_, e2_;
  std::vector<std::array<double, 2>> row_;
};

std::array<double, 2> solve_step(const ProblemSpec& spec, const CollocationGrid& grid,
                                 RowAssembler& rows, int n,
                                 const std::vector<std::array<double, 2>>& prior) {
  double F[2];
  double B[2][2];
  double H[2];
  for (int j = 1; j <= 2; ++j) {
    double t = grid.point(n, j);
    H[j - 1] = h_eval(spec, t);
    if (H[j - 1] == 0.0)
      throw h_zero_error("solve_vie: H vanishes at collocation point t = " +
                         std::to_string(t));
    const auto& a = rows.assemble(n, t);
    double acc = g_eval(spec, t);
    for (int m = 1; m < n; ++m)
      acc += a[m][0] * prior[m - 1][0] + a[m][1] * prior[m - 1][1];
    F[j - 1] = acc;
    B[j - 1][0] = a[n][0];
    B[j - 1][1] = a[n][1];
  }
  double m11 = H[0] - B[0][0], m12 = -B[0][1];
  double m21 = -B[1][0], m22 = H[1] - B[1][1];
  double det = m11 * m22 - m12 * m21;
  double norm = std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
  if (std::abs(det) < 1e-12 * norm)
    throw singular_system_error("solve_vie: singular 2x2 system at interval " +
                                std::to_string(n) + " (time step too large)");
  return {(F[0] * m22 - F[1] * m12) / det, (F[1] * m11 - F[0] * m21) / det};
}

} // namespace

namespace detail {

std::array<double, 2> march_step(const ProblemSpec& spec, const CollocationGrid& grid,
                                 int n, const std::vector<std::array<double, 2>>& prior) {
  RowAssembler rows(spec, grid);
  return solve_step(spec, grid, rows, n, prior);
}

} // namespace detail

PiecewiseLinear solve_vie(const ProblemSpec& spec, const CollocationGrid& grid) {
  spec.validate();
  int N = grid.size();
  RowAssembler rows(spec, grid);
  std::vector<std::array<double, 2>> values;
  values.reserve(N);
  for (int n = 1; n <= N; ++n)
    values.push_back(solve_step(spec, grid, rows, n, values));
  return {grid, std::move(values)};
}

double eval_w(const PiecewiseLinear& sol, double t) {
  const auto& nodes = sol.grid.mesh.nodes;
  if (!(t > 0.0) || t > sol.grid.mesh.horizon)
    throw std::domain_error("eval_w: t outside (0, T]");
  // I_n = (t_{n-1}, t_n]: first node >= t
  auto it = std::lower_bound(nodes.begin() + 1, nodes.end(), t);
  int n = static_cast<int>(it - nodes.begin());
  return sol.values[n - 1][0] * lagrange_poly(sol.grid, n, 1)(t) +
         sol.values[n - 1][1] * lagrange_poly(sol.grid, n, 2)(t);
}

double residual(const ProblemSpec& spec, const CollocationGrid& grid,
                const PiecewiseLinear& sol) {
  int N = grid.size();
  RowAssembler rows(spec, grid);
  double worst = 0.0;
  for (int n = 1; n <= N; ++n) {
    for (int j = 1; j <= 2; ++j) {
      double t = grid.point(n, j);
      const auto& a = rows.assemble(n, t);
      double acc = h_eval(spec, t) * sol.values[n - 1][j - 1] - g_eval(spec, t);
      for (int m = 1; m <= n; ++m)
        acc -= a[m][0] * sol.values[m - 1][0] + a[m][1] * sol.values[m - 1][1];
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

} // namespace subdiff
