#include "subdiff/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "subdiff/benchmark.hpp"
#include "subdiff/collocation.hpp"
#include "subdiff/reconstruct.hpp"

namespace subdiff {

namespace {

std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fmt_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string fmt_plain(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double cell_error(const RunConfig& cfg, double delta, int n) {
  auto mesh = build_graded(n, delta, cfg.horizon);
  auto grid = collocation_points(mesh, cfg.xi1, cfg.xi2);
  auto spec = benchmark::make_problem(cfg.alpha, cfg.gamma_param);
  spec.horizon = cfg.horizon;
  auto sol = solve_vie(spec, grid);
  benchmark::BenchmarkCase bc(cfg.alpha, cfg.gamma_param);
  double worst = 0.0;
  for (double t : fine_grid(grid))
    worst = std::max(worst, std::abs(benchmark::exact_w(bc, t) - eval_w(sol, t)));
  return worst;
}

void write_out(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

void RunConfig::validate() const {
  if (n_values.empty() || deltas.empty())
    throw std::invalid_argument("config: need at least one N and one delta");
  for (std::size_t i = 1; i < n_values.size(); ++i)
    if (n_values[i] <= n_values[i - 1])
      throw std::invalid_argument("config: N list must be ascending");
  for (double d : deltas)
    if (!(d >= 1.0)) throw std::invalid_argument("config: every delta must be >= 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("config: T must be > 0");
  if (!(0.0 < xi1 && xi1 < xi2 && xi2 < 1.0))
    throw std::invalid_argument("config: need 0 < xi1 < xi2 < 1");
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& config) {
  config.validate();
  std::size_t cells = config.deltas.size() * config.n_values.size();
  std::vector<ConvergenceRow> rows(cells);
  std::vector<std::future<void>> jobs;
  jobs.reserve(cells);
  for (std::size_t di = 0; di < config.deltas.size(); ++di) {
    for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
      std::size_t slot = di * config.n_values.size() + ni;
      jobs.push_back(std::async(std::launch::async, [&, di, ni, slot] {
        ConvergenceRow& row = rows[slot];
        row.n = config.n_values[ni];
        row.delta = config.deltas[di];
        try {
          row.error = cell_error(config, row.delta, row.n);
        } catch (const std::exception& e) {
          row.failed = true;
          row.message = e.what();
        }
      }));
    }
  }
  for (auto& j : jobs) j.get();
  // rates within each delta column, for doubling N only
  for (std::size_t di = 0; di < config.deltas.size(); ++di) {
    for (std::size_t ni = 1; ni < config.n_values.size(); ++ni) {
      auto& prev = rows[di * config.n_values.size() + ni - 1];
      auto& cur = rows[di * config.n_values.size() + ni];
      if (!prev.failed && !cur.failed && cur.n == 2 * prev.n && cur.error > 0.0)
        cur.rate = std::log2(prev.error / cur.error);
    }
  }
  return rows;
}

std::vector<SurfaceRow> run_surface(const RunConfig& config) {
  config.validate();
  if (!config.surface) throw std::invalid_argument("run_surface: surface options not set");
  const SurfaceOptions& opt = *config.surface;
  if (opt.x_resolution < 2) throw std::invalid_argument("run_surface: x resolution >= 2");
  if (!(opt.t_min < opt.t_max)) throw std::invalid_argument("run_surface: empty time window");
  double delta = config.deltas.front();
  int n = config.n_values.front();
  auto mesh = build_graded(n, delta, config.horizon);
  auto grid = collocation_points(mesh, config.xi1, config.xi2);
  auto spec = benchmark::make_problem(config.alpha, config.gamma_param);
  spec.horizon = config.horizon;
  auto sol = solve_vie(spec, grid);
  auto table = build_table(spec, grid, sol);
  benchmark::BenchmarkCase bc(config.alpha, config.gamma_param);
  std::vector<SurfaceRow> rows;
  for (int k = 1; k <= n; ++k) {
    double t = mesh.nodes[k];
    if (t < opt.t_min || t > opt.t_max) continue;
    for (int xi = 0; xi < opt.x_resolution; ++xi) {
      double x = static_cast<double>(xi) / (opt.x_resolution - 1);
      double ex = benchmark::exact_u(bc, x, t);
      double ap = eval_u(table, x, k);
      rows.push_back({x, t, ex, ap, std::abs(ex - ap)});
    }
  }
  return rows;
}

std::string render(const std::vector<ConvergenceRow>& rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "N,delta,error,rate\n";
    for (const auto& r : rows) {
      out += std::to_string(r.n) + "," + fmt_plain(r.delta) + ",";
      out += r.failed ? "failed" : fmt_sci(r.error);
      out += ",";
      if (r.rate) out += fmt_rate(*r.rate);
      out += "\n";
    }
    return out;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["N"] = r.n;
    o["delta"] = r.delta;
    if (r.failed) {
      o["error"] = nullptr;
      o["message"] = r.message;
    } else {
      o["error"] = r.error;
    }
    if (r.rate)
      o["rate"] = *r.rate;
    else
      o["rate"] = nullptr;
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

std::string render_surface(const std::vector<SurfaceRow>& rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "x,t,exact,approx,diff\n";
    for (const auto& r : rows) {
      out += fmt_plain(r.x);
      out += ",";
      out += fmt_plain(r.t);
      out += ",";
      out += fmt_sci(r.exact);
      out += ",";
      out += fmt_sci(r.approx);
      out += ",";
      out += fmt_sci(r.diff);
      out += "\n";
    }
    return out;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["x"] = r.x;
    o["t"] = r.t;
    o["exact"] = r.exact;
    o["approx"] = r.approx;
    o["diff"] = r.diff;
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

void emit(const std::vector<ConvergenceRow>& rows, OutputFormat format,
          const std::string& path) {
  write_out(render(rows, format), path);
}

void emit_surface(const std::vector<SurfaceRow>& rows, OutputFormat format,
                  const std::string& path) {
  write_out(render_surface(rows, format), path);
}

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "alpha") {
    cfg.alpha = std::stod(value);
  } else if (key == "gamma") {
    cfg.gamma_param = std::stod(value);
  } else if (key == "delta") {
    cfg.deltas.clear();
    for (const auto& p : split(value, ',')) cfg.deltas.push_back(std::stod(trim(p)));
  } else if (key == "N") {
    cfg.n_values.clear();
    for (const auto& p : split(value, ',')) cfg.n_values.push_back(std::stoi(trim(p)));
  } else if (key == "T") {
    cfg.horizon = std::stod(value);
  } else if (key == "xi") {
    auto parts = split(value, ',');
    if (parts.size() != 2) throw std::invalid_argument("config: xi needs two values");
    cfg.xi1 = std::stod(trim(parts[0]));
    cfg.xi2 = std::stod(trim(parts[1]));
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "format") {
    if (value == "csv")
      cfg.format = OutputFormat::csv;
    else if (value == "json")
      cfg.format = OutputFormat::json;
    else
      throw std::invalid_argument("config: format must be csv or json");
  } else if (key == "surface") {
    auto parts = split(value, ',');
    if (parts.size() != 3)
      throw std::invalid_argument("config: surface needs xres,tmin,tmax");
    SurfaceOptions opt;
    opt.x_resolution = std::stoi(trim(parts[0]));
    opt.t_min = std::stod(trim(parts[1]));
    opt.t_max = std::stod(trim(parts[2]));
    cfg.surface = opt;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

bool any_failed(const std::vector<ConvergenceRow>& rows) {
  return std::any_of(rows.begin(), rows.end(),
                     [](const ConvergenceRow& r) { return r.failed; });
}

} // namespace subdiff
