#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ebie/errors.hpp"
#include "ebie/experiments.hpp"

using namespace ebie;

namespace {

// Kite at N=128 resolves the eps=0.02 interface well enough for clean
// quadratic fits; eps below that needs more nodes than a unit test wants.
ExperimentConfig cheap_config() {
  ExperimentConfig cfg = default_config();
  cfg.problem.nodes = 128;
  cfg.epsilons = {0.08, 0.04, 0.02};
  return cfg;
}

const CheckRow* find_row(const Report& report, const std::string& check) {
  for (const auto& row : report.rows)
    if (row.check == check) return &row;
  return nullptr;
}

std::vector<double> remainders_of(const Report& report, const std::string& check) {
  std::vector<double> out;
  for (const auto& row : report.rows)
    if (row.check == check && std::isfinite(row.epsilon)) out.push_back(row.remainder);
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

TEST_CASE("slope fit recovers known convergence rates") {
  CHECK(fit_slope({0.08, 0.04, 0.02}, {6.4e-3, 1.6e-3, 4.0e-4}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit_slope({0.08, 0.04}, {0.24, 0.12}) == doctest::Approx(1.0).epsilon(1e-12));
  const double c = 7.3;
  CHECK(fit_slope({0.1, 0.05, 0.025, 0.0125},
                  {c * 1e-3, c * 1.25e-4, c * 1.5625e-5, c * 1.953125e-6}) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("slope fit rejects unusable sweep data") {
  CHECK_THROWS_AS(fit_slope({}, {}), ComputeFailure);
  CHECK_THROWS_AS(fit_slope({0.08}, {1.0}), ComputeFailure);
  CHECK_THROWS_AS(fit_slope({0.08, 0.04}, {1.0, 0.0}), ComputeFailure);
  CHECK_THROWS_AS(fit_slope({0.08, 0.04}, {1.0, -2.0}), ComputeFailure);
  // Identical epsilons leave the fit without a horizontal spread.
  CHECK_THROWS_AS(fit_slope({0.05, 0.05}, {1.0, 2.0}), ComputeFailure);
}

TEST_CASE("default configuration describes a valid contrast problem") {
  ExperimentConfig cfg = default_config();
  CHECK_NOTHROW(cfg.problem.validate());
  CHECK(cfg.problem.nodes == 256);
  REQUIRE(cfg.epsilons.size() == 4);
  CHECK(cfg.epsilons.front() == doctest::Approx(0.08));
  CHECK(cfg.epsilons.back() == doctest::Approx(0.01));
  CHECK(cfg.ring_points == 12);
  CHECK(cfg.ring_radius == doctest::Approx(3.0));
  CHECK(cfg.emt_max_order == 2);
  // The kite's farthest node pair sits at the parameter values +-pi/2.
  CHECK(cfg.problem.curve.diameter() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(cfg.s_curve.diameter() == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("tolerance lookup prefers configured overrides") {
  ExperimentConfig cfg = default_config();
  CHECK(cfg.tol("no-such-key", 3.5e-7) == doctest::Approx(3.5e-7));
  cfg.tolerances["moment"] = 1e-3;
  CHECK(cfg.tol("moment", 1e-8) == doctest::Approx(1e-3));
}

TEST_CASE("matched contrast is reported as trivial") {
  ExperimentConfig cfg = default_config();
  cfg.problem.nodes = 256;
  cfg.problem.inclusion = cfg.problem.background;
  Report report = run_solve(cfg);
  CHECK(report.all_pass());
  const CheckRow* trivial = find_row(report, "trivial-contrast");
  REQUIRE(trivial != nullptr);
  CHECK(trivial->pass == 1);
  CHECK(trivial->value <= 1e-9);
  // The solve run stops once the contrast is trivial: no far-field fit on noise.
  CHECK(find_row(report, "far-field-exponent") == nullptr);
  CHECK(report.rows.size() == 6);
}

TEST_CASE("contrast solve passes every invariant row") {
  ExperimentConfig cfg = default_config();
  Report report = run_solve(cfg);
  CHECK(report.all_pass());
  CHECK(find_row(report, "trivial-contrast") == nullptr);
  for (int m = 1; m <= 3; ++m) {
    const CheckRow* row = find_row(report, "exterior-moment-" + std::to_string(m));
    REQUIRE(row != nullptr);
    CHECK(row->value <= 1e-8);
  }
  const CheckRow* far = find_row(report, "far-field-exponent");
  REQUIRE(far != nullptr);
  CHECK(far->slope == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(far->pass == 1);
}

TEST_CASE("expansion sweep verifies quadratic remainders") {
  Report report = run_expand(cheap_config());
  CHECK(report.all_pass());
  // Five sweeps, each with one row per epsilon plus a fit and a refit row.
  CHECK(report.rows.size() == 25);
  for (const char* check : {"ring-remainder", "single-layer-pullback", "conormal-pullback",
                            "exterior-density-remainder", "interior-density-remainder"}) {
    const CheckRow* fit = find_row(report, std::string(check) + "-slope");
    REQUIRE(fit != nullptr);
    CHECK(fit->slope >= 1.9);
    CHECK(fit->pass == 1);
    REQUIRE(find_row(report, std::string(check) + "-slope-stability") != nullptr);
  }
  const CheckRow* ring = find_row(report, "ring-remainder-slope");
  CHECK(ring->slope <= 2.1);
  for (const auto& row : report.rows) {
    if (!std::isfinite(row.epsilon)) continue;
    CHECK(row.pass == -1);
    CHECK(!std::isfinite(row.slope));
    CHECK(row.remainder > 0.0);
  }
}

TEST_CASE("traction sweep and moment sweep measure the same gap identity") {
  ExperimentConfig cfg = cheap_config();
  Report traction = run_traction(cfg);
  Report emt = run_emt(cfg);
  CHECK(traction.all_pass());
  CHECK(emt.all_pass());
  const CheckRow* agreement = find_row(emt, "form-agreement");
  REQUIRE(agreement != nullptr);
  CHECK(agreement->value <= 1e-6);
  // The surface gap and the moment-sum difference are the same bilinear
  // quantity computed through boundary traces and through layer densities.
  std::vector<double> gap = remainders_of(traction, "surface-gap");
  std::vector<double> sum = remainders_of(emt, "moment-sum-remainder");
  REQUIRE(gap.size() == cfg.epsilons.size());
  REQUIRE(sum.size() == cfg.epsilons.size());
  for (std::size_t i = 0; i < gap.size(); ++i)
    CHECK(std::abs(gap[i] - sum[i]) <= 1e-8);
}

TEST_CASE("emt run reports the pairwise interaction table") {
  ExperimentConfig cfg = cheap_config();
  cfg.epsilons = {0.08, 0.04};
  cfg.emt_max_order = 1;
  std::string table;
  Report report = run_emt(cfg, &table);
  CHECK(report.all_pass());
  std::istringstream in(table);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "alpha1,alpha2,beta1,beta2,j,k,value");
  std::set<std::string> keys;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    auto fields = split_fields(line);
    REQUIRE(fields.size() == 7);
    const int a1 = std::stoi(fields[0]), a2 = std::stoi(fields[1]);
    const int b1 = std::stoi(fields[2]), b2 = std::stoi(fields[3]);
    const int j = std::stoi(fields[4]), k = std::stoi(fields[5]);
    CHECK(a1 + a2 == 1);
    CHECK(b1 + b2 == 1);
    CHECK((j == 1 || j == 2));
    CHECK((k == 1 || k == 2));
    keys.insert(line.substr(0, line.rfind(',')));
  }
  CHECK(rows == 16);
  CHECK(keys.size() == 16);
}

TEST_CASE("report csv leaves unavailable fields empty and is deterministic") {
  ExperimentConfig cfg = cheap_config();
  cfg.problem.nodes = 96;
  cfg.epsilons = {0.08, 0.04};
  const std::string csv = run_traction(cfg).to_csv();
  CHECK(run_traction(cfg).to_csv() == csv);

  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "experiment,check,epsilon,N,value,remainder,slope,pass");
  bool saw_sweep_row = false, saw_fit_row = false;
  while (std::getline(in, line)) {
    auto fields = split_fields(line);
    REQUIRE(fields.size() == 8);
    CHECK(fields[0] == "traction");
    CHECK(fields[3] == "96");
    if (fields[1] == "surface-gap") {
      saw_sweep_row = true;
      CHECK(!fields[2].empty());
      CHECK(!fields[4].empty());
      CHECK(!fields[5].empty());
      CHECK(fields[6].empty());
      CHECK(fields[7].empty());
    } else if (fields[1] == "surface-gap-slope") {
      saw_fit_row = true;
      CHECK(fields[2].empty());
      CHECK(fields[4].empty());
      CHECK(fields[5].empty());
      CHECK(!fields[6].empty());
      CHECK((fields[7] == "0" || fields[7] == "1"));
    }
  }
  CHECK(saw_sweep_row);
  CHECK(saw_fit_row);
}

TEST_CASE("combined sweep aggregates the three experiment families") {
  Report report = run_sweep_all(cheap_config());
  CHECK(report.all_pass());
  CHECK(report.rows.size() == 16);
  std::set<std::string> families;
  for (const auto& row : report.rows) families.insert(row.experiment);
  CHECK(families == std::set<std::string>{"emt", "expansion", "traction"});
}
