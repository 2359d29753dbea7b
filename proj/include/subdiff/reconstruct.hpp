#pragma once

#include <map>
#include <vector>

#include "subdiff/collocation.hpp"

namespace subdiff {

/// Approximate Fourier coefficients of u at the mesh nodes t_1..t_N.
struct CoefficientTable {
  std::vector<double> times;            // t_n, n = 1..N
  std::vector<double> u10;              // u_10(t_n)
  std::map<int, std::vector<double>> u1; // i -> u_{1i}(t_n)
  std::map<int, std::vector<double>> u2; // i -> u_{2i}(t_n)
};

/// u_{1i}(t_n) from the discretized convolution with the Psi bracket.
double coeff_u1(const ProblemSpec& spec, const CollocationGrid& grid,
                const PiecewiseLinear& sol, int i, int n);

/// u_10(t_n): pure power kernel, integrated exactly against the basis.
double coeff_u10(const ProblemSpec& spec, const CollocationGrid& grid,
                 const PiecewiseLinear& sol, int n);

/// u_{2i}(t_n), including the Prabhakar coupling term from u_{1i}.
double coeff_u2(const ProblemSpec& spec, const CollocationGrid& grid,
                const PiecewiseLinear& sol, int i, int n);

/// All coefficients at all nodes.
CoefficientTable build_table(const ProblemSpec& spec,
                             const CollocationGrid& grid,
                             const PiecewiseLinear& sol);

/// u(x, t_n) from the stored coefficients and the phi-basis.
double eval_u(const CoefficientTable& table, double x, int n);

} // namespace subdiff
