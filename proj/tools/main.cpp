#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebie/errors.hpp"
#include "ebie/experiments.hpp"

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
  throw ebie::ConfigInvalid("config field " + path + ": " + why);
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) bad_field(path, "expected a number");
  return j.get<double>();
}

int get_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad_field(path, "expected an integer");
  return j.get<int>();
}

ebie::Curve parse_curve(const json& j, const std::string& path) {
  if (!j.is_object()) bad_field(path, "expected an object with cos/sin coefficient lists");
  ebie::Curve c;
  const auto read = [&](const char* key, std::vector<ebie::Vec2>& dst) {
    if (!j.contains(key)) return;
    const json& arr = j.at(key);
    if (!arr.is_array()) bad_field(path + "." + key, "expected an array of [x, y] pairs");
    for (size_t i = 0; i < arr.size(); ++i) {
      const json& e = arr[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        bad_field(path + "." + key + "[" + std::to_string(i) + "]", "expected an [x, y] pair");
      dst.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  };
  read("cos", c.cos_coeffs);
  read("sin", c.sin_coeffs);
  if (c.cos_coeffs.empty() && c.sin_coeffs.empty()) bad_field(path, "curve has no coefficients");
  return c;
}

ebie::PerturbationField parse_perturbation(const json& j, const std::string& path) {
  if (!j.is_object()) bad_field(path, "expected an object with h_cos/h_sin lists");
  ebie::PerturbationField h;
  const auto read = [&](const char* key, std::vector<double>& dst) {
    if (!j.contains(key)) return;
    const json& arr = j.at(key);
    if (!arr.is_array()) bad_field(path + "." + key, "expected an array of numbers");
    for (size_t i = 0; i < arr.size(); ++i)
      dst.push_back(get_number(arr[i], path + "." + key + "[" + std::to_string(i) + "]"));
  };
  read("h_cos", h.h_cos);
  read("h_sin", h.h_sin);
  return h;
}

ebie::LamePair parse_lame(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("mu"))
    bad_field(path, "expected an object with lambda and mu");
  return {get_number(j.at("lambda"), path + ".lambda"), get_number(j.at("mu"), path + ".mu")};
}

ebie::PolynomialField parse_field(const json& j, const std::string& path) {
  if (!j.is_array()) bad_field(path, "expected an array of monomial terms");
  ebie::PolynomialField f;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    if (!t.is_object() || !t.contains("a") || !t.contains("alpha") || !t.contains("component"))
      bad_field(p, "expected an object with a, alpha, component");
    const json& al = t.at("alpha");
    if (!al.is_array() || al.size() != 2) bad_field(p + ".alpha", "expected [a1, a2]");
    const int ax = get_integer(al[0], p + ".alpha[0]");
    const int ay = get_integer(al[1], p + ".alpha[1]");
    if (ax < 0 || ay < 0) bad_field(p + ".alpha", "exponents must be nonnegative");
    const int comp = get_integer(t.at("component"), p + ".component");
    if (comp != 1 && comp != 2) bad_field(p + ".component", "must be 1 or 2");
    f.terms.push_back({get_number(t.at("a"), p + ".a"), ax, ay, comp - 1});
  }
  return f;
}

ebie::ExperimentConfig load_config(const std::string& config_path) {
  ebie::ExperimentConfig cfg = ebie::default_config();
  if (config_path.empty()) return cfg;

  std::ifstream in(config_path);
  if (!in) throw ebie::ConfigInvalid("cannot open config file " + config_path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ebie::ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ebie::ConfigInvalid("config root must be an object");

  static const char* known[] = {"curve",       "background", "inclusion",   "data",
                                "second_data", "perturbation", "epsilons",  "nodes",
                                "ring",        "observation_curve", "emt_max_order",
                                "tolerances"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || (key == k);
    if (!ok) bad_field(key, "unknown field");
  }

  if (j.contains("curve")) cfg.problem.curve = parse_curve(j.at("curve"), "curve");
  if (j.contains("background"))
    cfg.problem.background = parse_lame(j.at("background"), "background");
  if (j.contains("inclusion")) cfg.problem.inclusion = parse_lame(j.at("inclusion"), "inclusion");
  if (j.contains("data")) cfg.problem.H = parse_field(j.at("data"), "data");
  if (j.contains("second_data")) cfg.F = parse_field(j.at("second_data"), "second_data");
  if (j.contains("perturbation"))
    cfg.h = parse_perturbation(j.at("perturbation"), "perturbation");
  if (j.contains("epsilons")) {
    const json& arr = j.at("epsilons");
    if (!arr.is_array() || arr.size() < 2)
      bad_field("epsilons", "expected an array of at least two values");
    cfg.epsilons.clear();
    for (size_t i = 0; i < arr.size(); ++i) {
      const double e = get_number(arr[i], "epsilons[" + std::to_string(i) + "]");
      if (!(e > 0.0)) bad_field("epsilons[" + std::to_string(i) + "]", "must be positive");
      cfg.epsilons.push_back(e);
    }
  }
  if (j.contains("nodes")) {
    cfg.problem.nodes = get_integer(j.at("nodes"), "nodes");
    if (cfg.problem.nodes < 16 || cfg.problem.nodes % 2 != 0)
      bad_field("nodes", "must be even and at least 16");
  }
  if (j.contains("ring")) {
    const json& r = j.at("ring");
    if (!r.is_object()) bad_field("ring", "expected an object");
    if (r.contains("radius")) cfg.ring_radius = get_number(r.at("radius"), "ring.radius");
    if (r.contains("points")) cfg.ring_points = get_integer(r.at("points"), "ring.points");
    if (!(cfg.ring_radius > 0.0)) bad_field("ring.radius", "must be positive");
    if (cfg.ring_points < 1) bad_field("ring.points", "must be at least 1");
  }
  if (j.contains("observation_curve"))
    cfg.s_curve = parse_curve(j.at("observation_curve"), "observation_curve");
  if (j.contains("emt_max_order")) {
    cfg.emt_max_order = get_integer(j.at("emt_max_order"), "emt_max_order");
    if (cfg.emt_max_order < 1) bad_field("emt_max_order", "must be at least 1");
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (!t.is_object()) bad_field("tolerances", "expected an object of named numbers");
    for (const auto& [key, value] : t.items())
      cfg.tolerances[key] = get_number(value, "tolerances." + key);
  }
  return cfg;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ebie::ComputeFailure("cannot write " + path.string());
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layer-potential solver for the elastic inclusion transmission problem"};
  app.require_subcommand(1);
  std::string config_path, out_dir;
  int nodes = 0;
  bool quiet = false;
  app.add_option("--config", config_path, "JSON experiment configuration file");
  app.add_option("--out", out_dir, "directory that receives the CSV artifacts");
  app.add_option("--nodes", nodes, "override the boundary node count");
  app.add_flag("--quiet", quiet, "suppress the stdout report");

  CLI::App* sc_solve = app.add_subcommand("solve", "base solve diagnostics");
  CLI::App* sc_expand = app.add_subcommand("expand", "interface, operator and density sweeps");
  CLI::App* sc_traction = app.add_subcommand("traction", "observation-surface gap sweep");
  CLI::App* sc_emt = app.add_subcommand("emt", "moment tensor table and perturbation sweep");
  CLI::App* sc_all = app.add_subcommand("sweep-all", "the three first-order sweeps in one report");
  for (CLI::App* sc : {sc_solve, sc_expand, sc_traction, sc_emt, sc_all}) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    ebie::ExperimentConfig cfg = load_config(config_path);
    if (nodes > 0) {
      if (nodes < 16 || nodes % 2 != 0) bad_field("--nodes", "must be even and at least 16");
      cfg.problem.nodes = nodes;
    }

    ebie::Report report;
    std::string table_csv;
    if (sc_solve->parsed())
      report = ebie::run_solve(cfg);
    else if (sc_expand->parsed())
      report = ebie::run_expand(cfg);
    else if (sc_traction->parsed())
      report = ebie::run_traction(cfg);
    else if (sc_emt->parsed())
      report = ebie::run_emt(cfg, &table_csv);
    else
      report = ebie::run_sweep_all(cfg);

    const std::string csv = report.to_csv();
    if (!quiet) {
      std::cout << csv;
      if (!table_csv.empty() && out_dir.empty()) std::cout << table_csv;
    }
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      write_file(std::filesystem::path(out_dir) / "report.csv", csv);
      if (!table_csv.empty())
        write_file(std::filesystem::path(out_dir) / "emt_table.csv", table_csv);
    }
    return report.all_pass() ? 0 : 1;
  } catch (const ebie::ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "compute error: " << e.what() << "\n";
    return 3;
  }
}
