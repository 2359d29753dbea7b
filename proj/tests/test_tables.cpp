#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subdiff/tables.hpp"

using namespace subdiff;

namespace {

RunConfig tiny_config() {
  RunConfig cfg;
  cfg.alpha = 0.5;
  cfg.gamma_param = 1.0;
  cfg.deltas = {1.0, 2.0};
  cfg.n_values = {8, 16};
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("RunConfig validation") {
  RunConfig bad = tiny_config();
  bad.n_values = {16, 8};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = tiny_config();
  bad.deltas = {0.5};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = tiny_config();
  bad.n_values.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = tiny_config();
  bad.xi1 = 0.9;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("run_convergence: shape, rates, determinism") {
  auto cfg = tiny_config();
  auto rows = run_convergence(cfg);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 8);
  CHECK(rows[0].delta == 1.0);
  CHECK_FALSE(rows[0].rate.has_value());
  CHECK(rows[1].rate.has_value());
  CHECK(rows[3].delta == 2.0);
  for (const auto& r : rows) {
    CHECK_FALSE(r.failed);
    CHECK(r.error > 0.0);
  }
  // doubling N improves the error in each column
  CHECK(rows[1].error < rows[0].error);
  CHECK(rows[3].error < rows[2].error);

  auto again = run_convergence(cfg);
  CHECK(render(rows, OutputFormat::csv) == render(again, OutputFormat::csv));
  CHECK(render(rows, OutputFormat::json) == render(again, OutputFormat::json));
}

TEST_CASE("emit: CSV golden row and byte-identical files") {
  std::vector<ConvergenceRow> rows(1);
  rows[0].n = 10;
  rows[0].delta = 5.0;
  rows[0].error = 4.1e-3;
  CHECK(render(rows, OutputFormat::csv) == "N,delta,error,rate\n10,5,4.100000e-03,\n");

  auto cfg = tiny_config();
  auto table = run_convergence(cfg);
  emit(table, OutputFormat::csv, "/tmp/subdiff_t1.csv");
  emit(table, OutputFormat::csv, "/tmp/subdiff_t2.csv");
  CHECK(slurp("/tmp/subdiff_t1.csv") == slurp("/tmp/subdiff_t2.csv"));
  std::remove("/tmp/subdiff_t1.csv");
  std::remove("/tmp/subdiff_t2.csv");
}

TEST_CASE("emit: JSON round-trips the table") {
  auto cfg = tiny_config();
  auto rows = run_convergence(cfg);
  auto parsed = nlohmann::json::parse(render(rows, OutputFormat::json));
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i]["N"].get<int>() == rows[i].n);
    CHECK(parsed[i]["delta"].get<double>() == rows[i].delta);
    CHECK(parsed[i]["error"].get<double>() == rows[i].error);
    if (rows[i].rate)
      CHECK(parsed[i]["rate"].get<double>() == *rows[i].rate);
    else
      CHECK(parsed[i]["rate"].is_null());
  }
}

TEST_CASE("emitted rates recompute from the error column") {
  auto cfg = tiny_config();
  auto rows = run_convergence(cfg);
  std::stringstream csv(render(rows, OutputFormat::csv));
  std::string line;
  std::getline(csv, line); // header
  std::vector<double> errs;
  std::vector<std::string> rates;
  while (std::getline(csv, line)) {
    auto p1 = line.find(','), p2 = line.find(',', p1 + 1), p3 = line.find(',', p2 + 1);
    errs.push_back(std::stod(line.substr(p2 + 1, p3 - p2 - 1)));
    rates.push_back(line.substr(p3 + 1));
  }
  REQUIRE(errs.size() == 4);
  CHECK(rates[0].empty());
  CHECK(std::abs(std::stod(rates[1]) - std::log2(errs[0] / errs[1])) <= 1e-3);
  CHECK(std::abs(std::stod(rates[3]) - std::log2(errs[2] / errs[3])) <= 1e-3);
}

TEST_CASE("config file parsing and flag overrides") {
  const char* path = "/tmp/subdiff_cfg.txt";
  {
    std::ofstream out(path);
    out << "# benchmark sweep\n";
    out << "alpha = 0.67\n";
    out << "gamma = 1.0\n";
    out << "delta = 1, 2, 3\n";
    out << "N = 10, 20, 40\n";
    out << "T = 1.0\n";
    out << "xi = 0.25, 0.75\n";
    out << "format = json\n";
    out << "out = table.json\n";
    out << "surface = 17, 0.26, 1.0\n";
  }
  auto cfg = parse_config_file(path);
  std::remove(path);
  CHECK(cfg.alpha == 0.67);
  CHECK(cfg.gamma_param == 1.0);
  REQUIRE(cfg.deltas.size() == 3);
  CHECK(cfg.deltas[2] == 3.0);
  REQUIRE(cfg.n_values.size() == 3);
  CHECK(cfg.n_values[1] == 20);
  CHECK(cfg.xi1 == 0.25);
  CHECK(cfg.xi2 == 0.75);
  CHECK(cfg.format == OutputFormat::json);
  CHECK(cfg.out == "table.json");
  REQUIRE(cfg.surface.has_value());
  CHECK(cfg.surface->x_resolution == 17);
  CHECK(cfg.surface->t_min == 0.26);

  apply_config_line(cfg, "alpha", "0.4"); // flag wins
  CHECK(cfg.alpha == 0.4);
  CHECK_THROWS_AS(apply_config_line(cfg, "bogus", "1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_line(cfg, "format", "yaml"), std::invalid_argument);
}

TEST_CASE("run_surface: boundary columns equal, refinement helps") {
  RunConfig cfg;
  cfg.alpha = 0.5;
  cfg.gamma_param = 1.0;
  cfg.deltas = {2.0};
  cfg.n_values = {12};
  cfg.surface = SurfaceOptions{9, 0.0, 1.0};
  auto rows = run_surface(cfg);
  REQUIRE(!rows.empty());
  // boundary condition u(0,t) = u(1,t) holds for both fields, row by row
  for (std::size_t i = 0; i < rows.size(); i += 9) {
    CHECK(rows[i].x == 0.0);
    CHECK(rows[i + 8].x == 1.0);
    CHECK(rows[i].exact == rows[i + 8].exact);
    CHECK(rows[i].approx == rows[i + 8].approx);
  }
  double worst12 = 0.0;
  for (const auto& r : rows) worst12 = std::max(worst12, r.diff);

  cfg.n_values = {24};
  double worst24 = 0.0;
  for (const auto& r : run_surface(cfg)) worst24 = std::max(worst24, r.diff);
  CHECK(worst24 < worst12);
}

TEST_CASE("run_surface: Riemann-Liouville case blows up inside the small-t window") {
  RunConfig cfg;
  cfg.alpha = 0.5;
  cfg.gamma_param = 0.5;
  cfg.deltas = {2.0};
  cfg.n_values = {32};
  cfg.surface = SurfaceOptions{9, 1e-4, 1.6e-3};
  auto small_t = run_surface(cfg);
  REQUIRE(!small_t.empty());
  cfg.surface = SurfaceOptions{9, 0.26, 1.0};
  auto large_t = run_surface(cfg);
  REQUIRE(!large_t.empty());
  auto peak = [](const std::vector<SurfaceRow>& rows) {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, std::abs(r.exact));
    return m;
  };
  CHECK(peak(small_t) > peak(large_t));
}
