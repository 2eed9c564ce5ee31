#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "tammann/config.hpp"
#include "tammann/eos.hpp"
#include "tammann/numerics.hpp"
#include "tammann/solver1d.hpp"
#include "tammann/solver2d.hpp"

namespace tammann {

enum class ShockProfile { step, linear_tail };

struct ShockSpec {
  double peak_p = 184.06e3;     // Pa absolute behind the front
  double ambient_p = kAtmosphere;
  double front_x = -6.0;        // m
  ShockProfile profile = ShockProfile::step;
  double tail_length = 0.0;     // m, linear_tail only
};

/// State behind a right-moving shock of pressure peak_p running into
/// `ambient`, from the single-shock Rankine-Hugoniot relations.
PrimState post_shock_state(const PrimState& ambient, const TammannEos& eos, double peak_p);
double shock_front_speed(const PrimState& ambient, const TammannEos& eos, double peak_p);

/// Initial primitive field along x for a shock in a gas at rest.
/// Throws ConfigError if the peak is below ambient.
std::function<PrimState(double)> build_initial_shock(const ShockSpec& shock, double rho_ambient,
                                                     const TammannEos& eos);

struct GaugeSpec {
  std::string id;
  double x = 0.0;
  double y = 0.0;
};

/// Complete description of one experiment.
struct ScenarioSpec {
  std::string name;
  int dims = 1;
  MaterialTable materials = MaterialTable::defaults();
  std::string gas = "air";
  std::string stiff_material = "water";
  ShockSpec shock;
  Numerics numerics;
  std::vector<GaugeSpec> gauges;
  double t_end = 0.016;
  int snapshots = 2;  // evenly spaced, including t=0 and t_end

  // 1D layout: regions separated by interfaces, left to right.
  double x_lo = -10.0, x_hi = 10.0;
  int cells = 2000;
  std::vector<double> interfaces;
  std::vector<std::string> regions;
  BoundaryKind bc_left = BoundaryKind::outflow, bc_right = BoundaryKind::outflow;
  double plastic_width = 0.0;

  // 2D layout.
  std::string geometry;  // "cartesian" or "mapped"
  int mx = 160, my = 80;
  std::array<double, 4> domain{-0.04, 0.04, 0.0, 0.04};  // x_lo, x_hi, y_lo, y_hi
  std::array<double, 4> inclusion_box{-0.015, 0.015, 0.0, 0.015};  // cartesian
  CircularInclusionMap circle;
  bool shell = false;  // mapped: plastic between r_i and r_o, water inside r_i
  std::string inclusion_material = "water";
  std::string shell_material = "plastic";
  Boundaries2D bc2d{BoundaryKind::outflow, BoundaryKind::outflow, BoundaryKind::wall,
                    BoundaryKind::outflow};
};

/// Plastic layer of the given width centred at x = 0 between air and water.
ScenarioSpec air_plastic_water_1d(double width);
ScenarioSpec air_water_1d();
ScenarioSpec cartesian_cylinder_2d();
ScenarioSpec mapped_sphere_2d(bool shell);

/// Named base scenario.
ScenarioSpec base_scenario(const std::string& name);

/// Base scenario named by `scenario.name`, then every recognised key applied.
/// Unknown keys raise ConfigError.
ScenarioSpec scenario_from_config(const Config& cfg);

/// Applies numerics / limiter / run keys only.
void apply_overrides(ScenarioSpec& spec, const Config& cfg);

MaterialSet material_set(const ScenarioSpec& spec, const std::vector<std::string>& used);

Solver1D build_solver1d(const ScenarioSpec& spec);
Solver2D build_solver2d(const ScenarioSpec& spec);

struct GaugePeak {
  std::string id;
  double max_kpa = 0.0;
  double t_max = 0.0;
};

std::vector<GaugePeak> gauge_report(const std::vector<Gauge>& gauges);

struct RunResult {
  std::vector<GaugePeak> peaks;
  std::vector<Gauge> gauges;
  std::vector<std::string> artifacts;
  int steps = 0;
  double t_final = 0.0;
  std::string grid_variant;
  double min_kappa = 1.0;
};

/// Runs the scenario. When output_dir is non-empty, writes gauges.csv,
/// snapshots and (2D) grid.txt and schlieren.csv there.
RunResult run_scenario(const ScenarioSpec& spec, const std::string& output_dir = "");

struct CalibrationResult {
  std::string gauge;
  double target_kpa = 0.0;
  double achieved_kpa = 0.0;
  int runs = 0;
};

/// Adjusts shock.peak_p by secant iteration until the named gauge records a
/// peak within rel_tol of target_kpa. Throws ConvergenceError otherwise.
ScenarioSpec calibrate_shock_peak(const ScenarioSpec& spec, const std::string& gauge,
                                  double target_kpa, CalibrationResult* result = nullptr,
                                  double rel_tol = 1e-4, int max_runs = 12);

/// Full key-value description of a scenario; feeding it back through
/// scenario_from_config reproduces the spec.
Config scenario_to_config(const ScenarioSpec& spec);

/// Keys accepted by scenario_from_config, for documentation and validation.
const std::set<std::string>& known_config_keys();

} // namespace tammann
