#pragma once

#include <optional>
#include <string>
#include <vector>

namespace subdiff {

enum class OutputFormat { csv, json };

struct SurfaceOptions {
  int x_resolution = 33;
  double t_min = 0.0;
  double t_max = 1.0;
};

/// One convergence sweep / surface dump on the benchmark problem.
struct RunConfig {
  double alpha = 0.4;
  double gamma_param = 1.0;
  std::vector<double> deltas = {1, 2, 3, 4, 5};
  std::vector<int> n_values = {10, 20, 40, 80, 160, 320};
  double horizon = 1.0;
  double xi1 = 0.21132486540518711775;
  double xi2 = 0.78867513459481288225;
  std::string out = "-";
  OutputFormat format = OutputFormat::csv;
  std::optional<SurfaceOptions> surface;

  void validate() const;
};

struct ConvergenceRow {
  int n = 0;
  double delta = 1.0;
  double error = 0.0;                 // max fine-grid error |w - w~|
  std::optional<double> rate;         // log2(e_N / e_2N), lagged
  bool failed = false;
  std::string message;                // failure detail when failed
};

struct SurfaceRow {
  double x, t, exact, approx, diff;
};

/// Solve the benchmark for each (delta, N) cell and measure the fine-grid
/// source error.  Failed cells are marked, not fatal.
std::vector<ConvergenceRow> run_convergence(const RunConfig& config);

/// Field dump (x, t_n, exact u, approximate u, |difference|) over the
/// requested x-grid and the mesh nodes inside the time window.
std::vector<SurfaceRow> run_surface(const RunConfig& config);

/// Serialize rows; path "-" writes to stdout.  CSV uses header
/// `N,delta,error,rate` with empty rate cells on first rows.
void emit(const std::vector<ConvergenceRow>& rows, OutputFormat format,
          const std::string& path);
void emit_surface(const std::vector<SurfaceRow>& rows, OutputFormat format,
                  const std::string& path);

std::string render(const std::vector<ConvergenceRow>& rows, OutputFormat format);
std::string render_surface(const std::vector<SurfaceRow>& rows, OutputFormat format);

/// Flat key=value config file ('#' comments).  Unknown keys are errors.
RunConfig parse_config_file(const std::string& path);
void apply_config_line(RunConfig& cfg, const std::string& key,
                       const std::string& value);

bool any_failed(const std::vector<ConvergenceRow>& rows);

} // namespace subdiff
