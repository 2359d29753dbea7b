#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "subdiff/problem.hpp"

namespace subdiff {

/// Raised when a 2x2 step system is numerically singular (time step too
/// large for the weakly singular kernel).
struct singular_system_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when H vanishes at a collocation point.
struct h_zero_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Piecewise linear collocation solution, defined on each half-open
/// interval I_n = (t_{n-1}, t_n] by its values at the collocation points.
/// Possibly discontinuous across nodes.
struct PiecewiseLinear {
  CollocationGrid grid;
  std::vector<std::array<double, 2>> values; // [n-1][s-1] = w(t_{n,s})
};

/// March the discontinuous collocation scheme: one 2x2 system per interval.
PiecewiseLinear solve_vie(const ProblemSpec& spec, const CollocationGrid& grid);

/// Evaluate the collocation solution at t in (0, T].
double eval_w(const PiecewiseLinear& sol, double t);

/// Max collocation-equation defect over the grid, with freshly recomputed
/// coefficients.
double residual(const ProblemSpec& spec, const CollocationGrid& grid,
                const PiecewiseLinear& sol);

namespace detail {
/// Recompute the step-n pair of values given prior values (for causality
/// checks); prior[m-1] holds the interval-m pair for m < n.
std::array<double, 2> march_step(const ProblemSpec& spec,
                                 const CollocationGrid& grid, int n,
                                 const std::vector<std::array<double, 2>>& prior);
} // namespace detail

} // namespace subdiff
