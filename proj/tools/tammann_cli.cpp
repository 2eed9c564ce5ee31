// Command-line front end: run, sweep, riemann, acoustics, gridcheck.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tammann/acoustics.hpp"
#include "tammann/config.hpp"
#include "tammann/error.hpp"
#include "tammann/mapped_grid.hpp"
#include "tammann/output.hpp"
#include "tammann/riemann_exact.hpp"
#include "tammann/scenarios.hpp"

#ifndef TAMMANN_VERSION
#define TAMMANN_VERSION "unknown"
#endif

using json = nlohmann::ordered_json;
using namespace tammann;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Doubles go through fmt_double so the manifest keeps round-trip precision.
json num(double v) { return json::parse(fmt_double(v)); }

Config load_config(const std::string& scenario, const std::string& file,
                   const std::vector<std::string>& overrides) {
  Config cfg;
  if (!file.empty()) cfg = Config::load(file);
  if (!scenario.empty()) cfg.set("scenario.name", scenario);
  for (const auto& o : overrides) cfg.apply_override(o);
  return cfg;
}

json peaks_json(const std::vector<GaugePeak>& peaks) {
  json out = json::array();
  for (const auto& p : peaks)
    out.push_back({{"gauge", p.id}, {"max_kPa", num(p.max_kpa)}, {"t_max_s", num(p.t_max)}});
  return out;
}

void write_manifest(const std::string& dir, const ScenarioSpec& spec, const RunResult& r,
                    const json& calibration = json()) {
  json m;
  m["version"] = TAMMANN_VERSION;
  json cfg = json::object();
  const Config echo = scenario_to_config(spec);
  for (const auto& [k, v] : echo.entries()) cfg[k] = v;
  m["config"] = cfg;
  m["grid"] = {{"variant", r.grid_variant}, {"min_kappa", num(r.min_kappa)}};
  m["steps"] = r.steps;
  m["t_final_s"] = num(r.t_final);
  m["peaks"] = peaks_json(r.peaks);
  m["artifacts"] = r.artifacts;
  if (!calibration.is_null()) m["calibration"] = calibration;
  std::ofstream os(dir + "/manifest.json");
  os << m.dump(2) << "\n";
  if (!os) throw ConfigError("cannot write manifest in '" + dir + "'");
}

void print_peaks(std::ostream& os, const std::string& title, const RunResult& r) {
  os << title << "  (" << r.steps << " steps, t = " << fmt_double(r.t_final) << " s)\n";
  os << "  gauge    max_kPa            t_max_s\n";
  for (const auto& p : r.peaks) {
    std::ostringstream line;
    line << "  " << std::left;
    line.width(8);
    line << p.id << " ";
    line.width(18);
    line << fmt_double(p.max_kpa) << " " << fmt_double(p.t_max) << "\n";
    os << line.str();
  }
}

// ---- run -----------------------------------------------------------------

struct RunOptions {
  std::string scenario, config, out = "out";
  std::vector<std::string> overrides;
  std::string calibrate;  // run only: GAUGE=KPA
};

void cmd_run(const RunOptions& o) {
  const Config cfg = load_config(o.scenario, o.config, o.overrides);
  ScenarioSpec spec = scenario_from_config(cfg);
  json calibration;
  if (!o.calibrate.empty()) {
    const auto eq = o.calibrate.find('=');
    if (eq == std::string::npos) throw ConfigError("--calibrate expects GAUGE=KPA");
    CalibrationResult c;
    spec = calibrate_shock_peak(spec, trim(o.calibrate.substr(0, eq)),
                                parse_double(o.calibrate.substr(eq + 1), "--calibrate"), &c);
    calibration = {{"gauge", c.gauge},
                   {"target_kPa", num(c.target_kpa)},
                   {"achieved_kPa", num(c.achieved_kpa)},
                   {"runs", c.runs},
                   {"peak_kPa", num(spec.shock.peak_p / 1000.0)}};
    std::cout << "calibrated shock.peak_kpa = " << fmt_double(spec.shock.peak_p / 1000.0) << " ("
              << c.runs << " runs)\n";
  }
  ensure_directory(o.out);
  const RunResult r = run_scenario(spec, o.out);
  write_manifest(o.out, spec, r, calibration);
  print_peaks(std::cout, spec.name, r);
}

// ---- sweep ---------------------------------------------------------------

struct SweepOptions {
  RunOptions base;
  std::string parameter;
  std::vector<std::string> values;
  int jobs = 1;
};

Config sweep_point(const Config& base, const std::string& param, const std::string& value) {
  Config c = base;
  if (param == "width") {
    parse_double(value, "width");
    c.set("scenario.name", "air_plastic_water_1d");
    c.set("geometry.plastic_width", value);
  } else if (param == "cells") {
    const ScenarioSpec probe = scenario_from_config(base);
    if (probe.dims == 1) {
      c.set("geometry.cells", value);
    } else {
      c.set("geometry.mx", value);
      const int mx = c.get_int("geometry.mx", 0);
      if (mx % 2 != 0) throw ConfigError("2D cell sweep needs even mx values");
      c.set("geometry.my", std::to_string(mx / 2));
    }
  } else if (param == "limiter") {
    c.set("limiter.bulk", value);
  } else {
    throw ConfigError("sweep parameter must be width, cells or limiter, got '" + param + "'");
  }
  return c;
}

void cmd_sweep(const SweepOptions& o) {
  if (o.values.empty()) throw ConfigError("sweep needs at least one value");
  const Config base = load_config(o.base.scenario, o.base.config, o.base.overrides);

  std::vector<ScenarioSpec> specs;
  std::vector<std::string> dirs;
  for (const auto& v : o.values) {
    specs.push_back(scenario_from_config(sweep_point(base, o.parameter, v)));
    dirs.push_back(o.base.out + "/" + o.parameter + "_" + v);
  }
  ensure_directory(o.base.out);

  std::vector<RunResult> results(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < specs.size(); k = next++) {
      try {
        results[k] = run_scenario(specs[k], dirs[k]);
        write_manifest(dirs[k], specs[k], results[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(o.jobs, 1, static_cast<int>(specs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Union of gauge ids in first-seen order.
  std::vector<std::string> ids;
  for (const auto& r : results)
    for (const auto& p : r.peaks)
      if (std::find(ids.begin(), ids.end(), p.id) == ids.end()) ids.push_back(p.id);

  std::vector<std::string> header = {o.parameter};
  for (const auto& id : ids) header.push_back("gauge_" + id + "_kPa");
  CsvWriter csv(o.base.out + "/summary.csv", header);
  for (std::size_t k = 0; k < results.size(); ++k) {
    csv << o.values[k];
    for (const auto& id : ids) {
      const auto& peaks = results[k].peaks;
      const auto it = std::find_if(peaks.begin(), peaks.end(),
                                   [&](const GaugePeak& p) { return p.id == id; });
      if (it == peaks.end())
        csv << std::string();
      else
        csv << it->max_kpa;
    }
    csv.end_row();
    print_peaks(std::cout, o.parameter + " = " + o.values[k], results[k]);
  }
  std::cout << "summary: " << o.base.out << "/summary.csv\n";
}

// ---- riemann -------------------------------------------------------------

PrimState parse_state(const std::string& s) {
  const auto v = split_list(s);
  if (v.size() != 3) throw ConfigError("state '" + s + "' must be rho,u,p");
  return {parse_double(v[0], "rho"), parse_double(v[1], "u"), 0.0, parse_double(v[2], "p")};
}

// Material name from the default table, or "gamma,p_inf".
TammannEos parse_eos(const std::string& s) {
  const MaterialTable table = MaterialTable::defaults();
  if (table.contains(s)) return table.at(s).eos;
  const auto v = split_list(s);
  if (v.size() != 2) throw ConfigError("EOS '" + s + "' must be a material name or gamma,p_inf");
  TammannEos eos{parse_double(v[0], "gamma"), parse_double(v[1], "p_inf"), "custom"};
  eos.validate();
  return eos;
}

struct RiemannOptions {
  std::string left, right, eos_left = "1.4,0", eos_right = "1.4,0", out;
  std::vector<double> xi;
  std::vector<double> xi_range;
};

void cmd_riemann(const RiemannOptions& o) {
  const PrimState l = parse_state(o.left), r = parse_state(o.right);
  const TammannEos el = parse_eos(o.eos_left), er = parse_eos(o.eos_right);
  check_state(l, el);
  check_state(r, er);
  std::vector<double> xi = o.xi;
  if (!o.xi_range.empty()) {
    if (o.xi_range.size() != 3 || o.xi_range[2] < 2 || o.xi_range[2] != std::floor(o.xi_range[2]))
      throw ConfigError("--xi-range needs lo,hi,n with integer n >= 2");
    const int n = static_cast<int>(o.xi_range[2]);
    for (int k = 0; k < n; ++k)
      xi.push_back(o.xi_range[0] + (o.xi_range[1] - o.xi_range[0]) * k / (n - 1));
  }
  if (xi.empty()) throw ConfigError("riemann needs --xi or --xi-range");

  const RiemannFan fan = solve_star(l, r, el, er);
  std::cerr << "p_star=" << fmt_double(fan.p_star) << " u_star=" << fmt_double(fan.u_star)
            << " rho_star_left=" << fmt_double(fan.rho_star_left)
            << " rho_star_right=" << fmt_double(fan.rho_star_right)
            << " left=" << (fan.kind_left == WaveKind::shock ? "shock" : "rarefaction")
            << " right=" << (fan.kind_right == WaveKind::shock ? "shock" : "rarefaction") << "\n";

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw ConfigError("cannot open '" + o.out + "'");
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  os << "xi,rho,u,p\n";
  for (double x : xi) {
    const PrimState w = sample(fan, x);
    os << fmt_double(x) << "," << fmt_double(w.rho) << "," << fmt_double(w.u) << ","
       << fmt_double(w.p) << "\n";
  }
}

// ---- acoustics -----------------------------------------------------------

struct AcousticsOptions {
  std::vector<std::string> materials = {"air", "plastic", "water"};
  std::vector<double> impedances;
  int terms = 50;
  std::string out;
};

void cmd_acoustics(const AcousticsOptions& o) {
  if (o.terms < 1) throw ConfigError("--terms must be >= 1");
  std::vector<std::string> names = o.materials;
  std::vector<double> z;
  if (!o.impedances.empty()) {
    if (o.impedances.size() != 3) throw ConfigError("--impedances needs Z_a,Z_p,Z_w");
    z = o.impedances;
    names = {"A", "P", "W"};
  } else {
    if (names.size() != 3) throw ConfigError("--materials needs three names (outer, layer, inner)");
    const MaterialTable table = MaterialTable::defaults();
    for (const auto& n : names) {
      if (!table.contains(n)) throw ConfigError("unknown material '" + n + "'");
      const Material& m = table.at(n);
      z.push_back(acoustic_medium(m.rho_ref, kAtmosphere, m.eos).impedance());
    }
  }

  std::ofstream coef_file, sums_file;
  std::ostream* coef = &std::cout;
  std::ostream* sums = &std::cout;
  if (!o.out.empty()) {
    ensure_directory(o.out);
    coef_file.open(o.out + "/coefficients.csv");
    sums_file.open(o.out + "/partial_sums.csv");
    coef = &coef_file;
    sums = &sums_file;
  }
  *coef << "from,to,Z_from,Z_to,T,R\n";
  const int pairs[4][2] = {{0, 1}, {1, 2}, {1, 0}, {0, 2}};
  for (const auto& pr : pairs) {
    const auto [t, r] = interface_coefficients(z[pr[0]], z[pr[1]]);
    *coef << names[pr[0]] << "," << names[pr[1]] << "," << fmt_double(z[pr[0]]) << ","
          << fmt_double(z[pr[1]]) << "," << fmt_double(t) << "," << fmt_double(r) << "\n";
  }
  if (o.out.empty()) *coef << "\n";

  const double closed = total_transmission(z[0], z[2]);
  *sums << "N,term,partial_sum,closed_form,relative_error\n";
  double sum = 0.0;
  for (int n = 1; n <= o.terms; ++n) {
    const double term = nth_transmission(z[0], z[1], z[2], n);
    sum += term;
    *sums << n << "," << fmt_double(term) << "," << fmt_double(sum) << "," << fmt_double(closed)
          << "," << fmt_double(std::abs(sum - closed) / std::abs(closed)) << "\n";
  }
}

// ---- gridcheck -----------------------------------------------------------

struct GridOptions {
  int mx = 160, my = 80;
  double r_i = 0.01, r_o = 0.015, r_m = 0.04;
  std::string branch = "auto";
  std::string dump;
};

void cmd_gridcheck(const GridOptions& o) {
  CircularInclusionMap circle{o.r_i, o.r_o, o.r_m, parse_outer_branch(o.branch)};
  circle.validate();
  CircularInclusionMap printed = circle, continuous = circle;
  printed.branch = OuterBranch::printed;
  continuous.branch = OuterBranch::continuous;

  Mapping mapping;
  mapping.kind = MappingKind::circular_inclusion;
  mapping.circle = circle;
  MappedGrid2D grid(o.mx, o.my, -1.0, 1.0, 0.0, 1.0, mapping);
  const OuterBranch used = grid.mapping().circle.branch;

  double area = 0.0;
  for (int j = 0; j < grid.my(); ++j)
    for (int i = 0; i < grid.mx(); ++i) area += grid.area(i, j);
  const double expected = 2.0 * o.r_m * o.r_m;

  // Ring alignment: mark both rings and count the interface edges they produce.
  grid.fill_material(0);
  bool aligned = true;
  std::string alignment_error;
  try {
    grid.assign_ring_interior(o.r_o / o.r_m, 1);
    grid.assign_ring_interior(o.r_i / o.r_m, 2);
  } catch (const ConfigError& e) {
    aligned = false;
    alignment_error = e.what();
  }
  const auto edges = grid.interface_edge_counts();

  json rep;
  rep["mx"] = o.mx;
  rep["my"] = o.my;
  rep["radii_m"] = {num(o.r_i), num(o.r_o), num(o.r_m)};
  rep["branch_requested"] = o.branch;
  rep["branch_used"] = to_string(used);
  rep["outer_ring_jump"] = {{"printed", num(outer_ring_jump(printed))},
                            {"continuous", num(outer_ring_jump(continuous))}};
  rep["min_kappa"] = num(grid.min_kappa());
  rep["max_closure_defect"] = num(grid.max_closure_defect());
  rep["total_area_m2"] = num(area);
  rep["expected_area_m2"] = num(expected);
  rep["area_relative_error"] = num(std::abs(area - expected) / expected);
  rep["rings_aligned"] = aligned;
  if (!aligned) rep["alignment_error"] = alignment_error;
  rep["interface_edges"] = {{"x", edges[0]}, {"y", edges[1]}};
  std::cout << rep.dump(2) << "\n";

  if (!o.dump.empty()) {
    std::ofstream os(o.dump);
    if (!os) throw ConfigError("cannot open '" + o.dump + "'");
    grid.dump(os, to_string(used));
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-material shock / interface solver with Tammann EOS"};
  app.set_version_flag("--version", TAMMANN_VERSION);
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run one scenario and write artifacts");
  auto add_run_options = [](CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--scenario", o.scenario, "Built-in scenario name");
    cmd->add_option("--config", o.config, "Scenario file")->check(CLI::ExistingFile);
    cmd->add_option("--set", o.overrides, "Override key=value (repeatable)");
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  };
  add_run_options(run, run_opt);
  run->add_option("--calibrate", run_opt.calibrate,
                  "GAUGE=KPA: tune the initial shock peak until the gauge reaches KPA");

  SweepOptions sweep_opt;
  sweep_opt.base.scenario = "";
  auto* sweep = app.add_subcommand("sweep", "Run a scenario for a list of parameter values");
  add_run_options(sweep, sweep_opt.base);
  sweep->add_option("--parameter", sweep_opt.parameter, "width | cells | limiter")->required();
  sweep->add_option("--values", sweep_opt.values, "Comma-separated values")
      ->delimiter(',')
      ->expected(0, -1);
  sweep->add_option("--jobs", sweep_opt.jobs, "Parallel runs")->capture_default_str();

  RiemannOptions rie_opt;
  auto* rie = app.add_subcommand("riemann", "Sample the exact Riemann solution");
  rie->add_option("--left", rie_opt.left, "rho,u,p")->required();
  rie->add_option("--right", rie_opt.right, "rho,u,p")->required();
  rie->add_option("--eos-left", rie_opt.eos_left, "Material name or gamma,p_inf")
      ->capture_default_str();
  rie->add_option("--eos-right", rie_opt.eos_right, "Material name or gamma,p_inf")
      ->capture_default_str();
  rie->add_option("--xi", rie_opt.xi, "Comma-separated x/t values")->delimiter(',');
  rie->add_option("--xi-range", rie_opt.xi_range, "lo,hi,n")->delimiter(',');
  rie->add_option("--out", rie_opt.out, "CSV path (default stdout)");

  AcousticsOptions ac_opt;
  auto* ac = app.add_subcommand("acoustics", "Linear transmission coefficients and series");
  ac->add_option("--materials", ac_opt.materials, "outer,layer,inner")->delimiter(',');
  ac->add_option("--impedances", ac_opt.impedances, "Z_outer,Z_layer,Z_inner")->delimiter(',');
  ac->add_option("--terms", ac_opt.terms, "Series terms")->capture_default_str();
  ac->add_option("--out", ac_opt.out, "Directory for the two CSVs (default stdout)");

  GridOptions grid_opt;
  auto* gc = app.add_subcommand("gridcheck", "Metric and continuity report for the mapped grid");
  gc->add_option("--mx", grid_opt.mx)->capture_default_str();
  gc->add_option("--my", grid_opt.my)->capture_default_str();
  gc->add_option("--r-i", grid_opt.r_i)->capture_default_str();
  gc->add_option("--r-o", grid_opt.r_o)->capture_default_str();
  gc->add_option("--r-m", grid_opt.r_m)->capture_default_str();
  gc->add_option("--branch", grid_opt.branch, "printed | continuous | auto")->capture_default_str();
  gc->add_option("--dump", grid_opt.dump, "Write the full grid dump here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) cmd_run(run_opt);
    if (*sweep) cmd_sweep(sweep_opt);
    if (*rie) cmd_riemann(rie_opt);
    if (*ac) cmd_acoustics(ac_opt);
    if (*gc) cmd_gridcheck(grid_opt);
  } catch (const StepFailure& e) {
    std::cerr << "numerical failure at t=" << fmt_double(e.time()) << " cell (" << e.cell_i()
              << ", " << e.cell_j() << "): " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const GridError& e) {
    std::cerr << "grid error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
