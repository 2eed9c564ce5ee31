#include "tammann/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tammann/error.hpp"
#include "tammann/output.hpp"
#include "tammann/riemann_exact.hpp"

namespace tammann {

PrimState post_shock_state(const PrimState& ambient, const TammannEos& eos, double peak_p) {
  if (peak_p == ambient.p) return ambient;
  const double q = shock_mass_flux(peak_p, ambient, eos);
  return {shock_density(peak_p, ambient, eos), ambient.u + (peak_p - ambient.p) / q, 0.0, peak_p};
}

double shock_front_speed(const PrimState& ambient, const TammannEos& eos, double peak_p) {
  if (peak_p == ambient.p) return ambient.u + sound_speed(ambient, eos);
  return ambient.u + shock_mass_flux(peak_p, ambient, eos) / ambient.rho;
}

std::function<PrimState(double)> build_initial_shock(const ShockSpec& shock, double rho_ambient,
                                                     const TammannEos& eos) {
  if (shock.peak_p < shock.ambient_p)
    throw ConfigError("shock peak pressure is below ambient");
  if (shock.profile == ShockProfile::linear_tail && !(shock.tail_length > 0.0))
    throw ConfigError("linear_tail profile needs a positive tail length");
  const PrimState ambient{rho_ambient, 0.0, 0.0, shock.ambient_p};
  check_state(ambient, eos);
  const PrimState peak = post_shock_state(ambient, eos, shock.peak_p);
  return [=](double x) -> PrimState {
    if (x >= shock.front_x) return ambient;
    if (shock.profile == ShockProfile::step) return peak;
    const double behind = shock.front_x - x;
    if (behind >= shock.tail_length) return ambient;
    // Each tail point carries the post-shock state of its own pressure.
    const double p = shock.ambient_p + (shock.peak_p - shock.ambient_p) * (1.0 - behind / shock.tail_length);
    return post_shock_state(ambient, eos, p);
  };
}

namespace {

void place_1d_gauges(ScenarioSpec& s) {
  const double w = s.plastic_width;
  const double off = std::max(1.0, 0.5 * w + 0.5);
  s.gauges = {{"1", -5.0, 0.0}, {"2", -off, 0.0}};
  if (w > 0.0) s.gauges.push_back({"3", 0.0, 0.0});
  s.gauges.push_back({"4", off, 0.0});
}

} // namespace

ScenarioSpec air_plastic_water_1d(double width) {
  if (width < 0.0) throw ConfigError("plastic width must be non-negative");
  if (width == 0.0) return air_water_1d();
  ScenarioSpec s;
  s.name = "air_plastic_water_1d";
  s.dims = 1;
  s.plastic_width = width;
  s.interfaces = {-0.5 * width, 0.5 * width};
  s.regions = {"air", "plastic", "water"};
  place_1d_gauges(s);
  return s;
}

ScenarioSpec air_water_1d() {
  ScenarioSpec s;
  s.name = "air_water_1d";
  s.dims = 1;
  s.plastic_width = 0.0;
  s.interfaces = {0.0};
  s.regions = {"air", "water"};
  place_1d_gauges(s);
  return s;
}

ScenarioSpec cartesian_cylinder_2d() {
  ScenarioSpec s;
  s.name = "cartesian_cylinder_2d";
  s.dims = 2;
  s.geometry = "cartesian";
  s.mx = 160;
  s.my = 80;
  s.shock.front_x = -0.03;
  s.t_end = 80e-6;
  s.gauges = {{"1", -0.01, 0.0}, {"air", -0.025, 0.0}};
  return s;
}

ScenarioSpec mapped_sphere_2d(bool shell) {
  ScenarioSpec s;
  s.name = shell ? "mapped_shell_2d" : "mapped_sphere_2d";
  s.dims = 2;
  s.geometry = "mapped";
  s.shell = shell;
  s.mx = 160;
  s.my = 80;
  s.circle.branch = OuterBranch::automatic;
  s.domain = {-1.0, 1.0, 0.0, 1.0};
  s.shock.front_x = -0.03;
  s.t_end = 80e-6;
  s.gauges = {{"1", -0.01, 0.0}, {"air", -0.025, 0.0}};
  return s;
}

ScenarioSpec base_scenario(const std::string& name) {
  if (name == "air_water_1d") return air_water_1d();
  if (name == "air_plastic_water_1d") return air_plastic_water_1d(2.6);
  if (name == "cartesian_cylinder_2d") return cartesian_cylinder_2d();
  if (name == "mapped_sphere_2d") return mapped_sphere_2d(false);
  if (name == "mapped_shell_2d") return mapped_sphere_2d(true);
  throw ConfigError("unknown scenario '" + name + "'");
}

const std::set<std::string>& known_config_keys() {
  static const std::set<std::string> keys = {
      "scenario.name", "scenario.t_end", "scenario.snapshots",
      "shock.peak_kpa", "shock.ambient_kpa", "shock.front", "shock.profile", "shock.tail_length",
      "geometry.x_lo", "geometry.x_hi", "geometry.cells", "geometry.plastic_width",
      "geometry.mx", "geometry.my", "geometry.r_i", "geometry.r_o", "geometry.r_m",
      "geometry.outer_branch",
      "riemann.interior", "riemann.interface", "riemann.speeds",
      "limiter.bulk", "limiter.stiff_material", "limiter.theta_policy",
      "limiter.modified_minmod_scale", "limiter.high_order",
      "numerics.cfl", "numerics.transverse", "numerics.axisymmetric", "numerics.source_splitting",
      "numerics.transverse_energy",
      "boundary.left", "boundary.right", "boundary.bottom", "boundary.top"};
  return keys;
}

void apply_overrides(ScenarioSpec& s, const Config& c) {
  Numerics& n = s.numerics;
  if (c.has("riemann.interior")) n.interior = parse_interior_solver(c.get_string("riemann.interior", ""));
  if (c.has("riemann.interface"))
    n.interface = parse_interface_solver(c.get_string("riemann.interface", ""));
  if (c.has("riemann.speeds")) n.speeds = parse_speed_estimate(c.get_string("riemann.speeds", ""));
  if (c.has("limiter.bulk")) n.bulk_limiter.kind = parse_limiter_kind(c.get_string("limiter.bulk", ""));
  if (c.has("limiter.theta_policy"))
    n.theta_policy = parse_theta_policy(c.get_string("limiter.theta_policy", ""));
  if (c.has("limiter.modified_minmod_scale")) {
    const double scale = c.get_double("limiter.modified_minmod_scale", 1.0 / 3.0);
    if (!(scale > 0.0 && scale <= 1.0)) throw ConfigError("modified_minmod_scale must lie in (0, 1]");
    n.stiff_limiter.scale = scale;
    n.bulk_limiter.scale = scale;
  }
  if (c.has("limiter.stiff_material")) s.stiff_material = c.get_string("limiter.stiff_material", "");
  n.high_order = c.get_bool("limiter.high_order", n.high_order);
  n.cfl = c.get_double("numerics.cfl", n.cfl);
  n.transverse = c.get_bool("numerics.transverse", n.transverse);
  n.axisymmetric = c.get_bool("numerics.axisymmetric", n.axisymmetric);
  if (c.has("numerics.source_splitting"))
    n.source_splitting = parse_source_splitting(c.get_string("numerics.source_splitting", ""));
  if (c.has("numerics.transverse_energy"))
    n.transverse_energy = parse_transverse_energy(c.get_string("numerics.transverse_energy", ""));
  s.t_end = c.get_double("scenario.t_end", s.t_end);
  s.snapshots = c.get_int("scenario.snapshots", s.snapshots);
}

ScenarioSpec scenario_from_config(const Config& c) {
  std::vector<std::string> unknown = c.unknown_keys(known_config_keys(), {"materials.", "gauges."});
  if (!unknown.empty()) throw ConfigError("unknown configuration key '" + unknown.front() + "'");

  const std::string name = c.get_string("scenario.name", "air_water_1d");
  ScenarioSpec s = name == "air_plastic_water_1d"
                       ? air_plastic_water_1d(c.get_double("geometry.plastic_width", 2.6))
                       : base_scenario(name);

  // Material overrides: materials.<name>.{gamma,p_inf,rho}.
  std::set<std::string> touched;
  for (const auto& [key, value] : c.entries()) {
    if (key.rfind("materials.", 0) != 0) continue;
    const auto rest = key.substr(10);
    const auto dot = rest.rfind('.');
    if (dot == std::string::npos) throw ConfigError("bad material key '" + key + "'");
    touched.insert(rest.substr(0, dot));
  }
  for (const auto& m : touched) {
    Material mat = s.materials.contains(m) ? s.materials.at(m) : Material{{1.4, 0.0, m}, 1.0};
    mat.eos.label = m;
    mat.eos.gamma = c.get_double("materials." + m + ".gamma", mat.eos.gamma);
    mat.eos.p_inf = c.get_double("materials." + m + ".p_inf", mat.eos.p_inf);
    mat.rho_ref = c.get_double("materials." + m + ".rho", mat.rho_ref);
    mat.eos.validate();
    if (!(mat.rho_ref > 0.0)) throw ConfigError("material density must be positive");
    s.materials.set(m, mat);
  }

  s.shock.peak_p = 1000.0 * c.get_double("shock.peak_kpa", s.shock.peak_p / 1000.0);
  s.shock.ambient_p = 1000.0 * c.get_double("shock.ambient_kpa", s.shock.ambient_p / 1000.0);
  s.shock.front_x = c.get_double("shock.front", s.shock.front_x);
  if (c.has("shock.profile")) {
    const auto p = c.get_string("shock.profile", "step");
    if (p == "step")
      s.shock.profile = ShockProfile::step;
    else if (p == "linear_tail")
      s.shock.profile = ShockProfile::linear_tail;
    else
      throw ConfigError("unknown shock profile '" + p + "'");
  }
  s.shock.tail_length = c.get_double("shock.tail_length", s.shock.tail_length);

  s.x_lo = c.get_double("geometry.x_lo", s.x_lo);
  s.x_hi = c.get_double("geometry.x_hi", s.x_hi);
  s.cells = c.get_int("geometry.cells", s.cells);
  s.mx = c.get_int("geometry.mx", s.mx);
  s.my = c.get_int("geometry.my", s.my);
  s.circle.r_i = c.get_double("geometry.r_i", s.circle.r_i);
  s.circle.r_o = c.get_double("geometry.r_o", s.circle.r_o);
  s.circle.r_m = c.get_double("geometry.r_m", s.circle.r_m);
  if (c.has("geometry.outer_branch"))
    s.circle.branch = parse_outer_branch(c.get_string("geometry.outer_branch", "auto"));

  if (s.dims == 1) {
    if (c.has("boundary.left")) s.bc_left = parse_boundary(c.get_string("boundary.left", ""));
    if (c.has("boundary.right")) s.bc_right = parse_boundary(c.get_string("boundary.right", ""));
  } else {
    const char* sides[4] = {"boundary.left", "boundary.right", "boundary.bottom", "boundary.top"};
    for (int k = 0; k < 4; ++k)
      if (c.has(sides[k])) s.bc2d[k] = parse_boundary(c.get_string(sides[k], ""));
  }

  // gauges.<id> = x  (1D)  or  x, y  (2D) replace the defaults.
  std::vector<GaugeSpec> gauges;
  for (const auto& [key, value] : c.entries()) {
    if (key.rfind("gauges.", 0) != 0) continue;
    const auto v = c.get_doubles(key, {});
    if (v.size() != static_cast<std::size_t>(s.dims))
      throw ConfigError("gauge '" + key + "' needs " + std::to_string(s.dims) + " coordinate(s)");
    gauges.push_back({key.substr(7), v[0], s.dims == 2 ? v[1] : 0.0});
  }
  if (!gauges.empty()) s.gauges = gauges;

  apply_overrides(s, c);
  return s;
}

ScenarioSpec calibrate_shock_peak(const ScenarioSpec& spec, const std::string& gauge,
                                  double target_kpa, CalibrationResult* result, double rel_tol,
                                  int max_runs) {
  if (!(target_kpa * 1000.0 > spec.shock.ambient_p))
    throw ConfigError("calibration target must exceed the ambient pressure");
  if (std::none_of(spec.gauges.begin(), spec.gauges.end(),
                   [&](const GaugeSpec& g) { return g.id == gauge; }))
    throw ConfigError("calibration gauge '" + gauge + "' is not defined");

  ScenarioSpec trial = spec;
  int runs = 0;
  // Overpressure recorded at the gauge for a given initial peak (Pa).
  auto measure = [&](double peak_p) {
    trial.shock.peak_p = peak_p;
    const RunResult r = run_scenario(trial);
    ++runs;
    for (const auto& p : r.peaks)
      if (p.id == gauge) return p.max_kpa;
    return 0.0;
  };

  const double amb_kpa = spec.shock.ambient_p / 1000.0;
  double x = target_kpa * 1000.0, x_prev = 0.0, y_prev = 0.0;
  double y = 0.0;
  for (;;) {
    y = measure(x) - target_kpa;
    if (std::abs(y) <= rel_tol * target_kpa) break;
    if (runs >= max_runs)
      throw ConvergenceError("shock peak calibration did not converge for gauge '" + gauge + "'");
    double next;
    if (runs == 1) {
      // Scale the initial overpressure by the measured overpressure deficit.
      next = spec.shock.ambient_p +
             (x - spec.shock.ambient_p) * (target_kpa - amb_kpa) / (target_kpa + y - amb_kpa);
    } else {
      next = x - y * (x - x_prev) / (y - y_prev);
    }
    if (!(next > spec.shock.ambient_p) || !std::isfinite(next)) next = 0.5 * (x + spec.shock.ambient_p);
    x_prev = x;
    y_prev = y;
    x = next;
  }
  trial.shock.peak_p = x;
  if (result) *result = {gauge, target_kpa, target_kpa + y, runs};
  return trial;
}

Config scenario_to_config(const ScenarioSpec& s) {
  Config c;
  const Numerics& n = s.numerics;
  c.set("scenario.name", s.name);
  c.set("scenario.t_end", fmt_double(s.t_end));
  c.set("scenario.snapshots", std::to_string(s.snapshots));
  c.set("shock.peak_kpa", fmt_double(s.shock.peak_p / 1000.0));
  c.set("shock.ambient_kpa", fmt_double(s.shock.ambient_p / 1000.0));
  c.set("shock.front", fmt_double(s.shock.front_x));
  c.set("shock.profile", s.shock.profile == ShockProfile::step ? "step" : "linear_tail");
  c.set("shock.tail_length", fmt_double(s.shock.tail_length));
  if (s.dims == 1) {
    c.set("geometry.x_lo", fmt_double(s.x_lo));
    c.set("geometry.x_hi", fmt_double(s.x_hi));
    c.set("geometry.cells", std::to_string(s.cells));
    c.set("geometry.plastic_width", fmt_double(s.plastic_width));
    c.set("boundary.left", to_string(s.bc_left));
    c.set("boundary.right", to_string(s.bc_right));
  } else {
    c.set("geometry.mx", std::to_string(s.mx));
    c.set("geometry.my", std::to_string(s.my));
    if (s.geometry == "mapped") {
      c.set("geometry.r_i", fmt_double(s.circle.r_i));
      c.set("geometry.r_o", fmt_double(s.circle.r_o));
      c.set("geometry.r_m", fmt_double(s.circle.r_m));
      c.set("geometry.outer_branch", to_string(s.circle.branch));
    }
    const char* sides[4] = {"boundary.left", "boundary.right", "boundary.bottom", "boundary.top"};
    for (int k = 0; k < 4; ++k) c.set(sides[k], to_string(s.bc2d[k]));
    c.set("numerics.transverse", n.transverse ? "true" : "false");
    c.set("numerics.axisymmetric", n.axisymmetric ? "true" : "false");
    c.set("numerics.source_splitting", to_string(n.source_splitting));
    c.set("numerics.transverse_energy", to_string(n.transverse_energy));
  }
  c.set("riemann.interior", to_string(n.interior));
  c.set("riemann.interface", to_string(n.interface));
  c.set("riemann.speeds", to_string(n.speeds));
  c.set("limiter.bulk", to_string(n.bulk_limiter.kind));
  c.set("limiter.stiff_material", s.stiff_material);
  c.set("limiter.theta_policy", to_string(n.theta_policy));
  c.set("limiter.modified_minmod_scale", fmt_double(n.stiff_limiter.scale));
  c.set("limiter.high_order", n.high_order ? "true" : "false");
  c.set("numerics.cfl", fmt_double(n.cfl));
  for (const auto& name : s.materials.names()) {
    const Material& m = s.materials.at(name);
    c.set("materials." + name + ".gamma", fmt_double(m.eos.gamma));
    c.set("materials." + name + ".p_inf", fmt_double(m.eos.p_inf));
    c.set("materials." + name + ".rho", fmt_double(m.rho_ref));
  }
  for (const auto& g : s.gauges)
    c.set("gauges." + g.id, s.dims == 1 ? fmt_double(g.x) : fmt_double(g.x) + ", " + fmt_double(g.y));
  return c;
}

MaterialSet material_set(const ScenarioSpec& spec, const std::vector<std::string>& used) {
  MaterialSet set;
  for (const auto& name : used) {
    const Material& m = spec.materials.at(name);
    set.add(name, m.eos, name == spec.stiff_material);
  }
  return set;
}

Solver1D build_solver1d(const ScenarioSpec& s) {
  if (s.dims != 1) throw ConfigError("scenario '" + s.name + "' is not one-dimensional");
  if (s.regions.size() != s.interfaces.size() + 1)
    throw ConfigError("scenario needs one region material per interval");
  Grid1D grid(s.x_lo, s.x_hi, s.cells);
  if (s.plastic_width > 0.0 && s.plastic_width < 4.0 * grid.dx() * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "plastic width " << s.plastic_width << " m is resolved by fewer than 4 cells (dx="
        << grid.dx() << ")";
    throw ConfigError(msg.str());
  }
  const MaterialSet mats = material_set(s, s.regions);
  std::vector<int> idx;
  for (const auto& r : s.regions) idx.push_back(mats.index_of(r));
  grid.set_layout(s.interfaces, idx);

  Solver1D solver(grid, mats, s.numerics, s.bc_left, s.bc_right);
  const int gas = mats.index_of(s.gas);
  if (gas < 0) throw ConfigError("gas material '" + s.gas + "' is not part of the layout");
  if (s.shock.front_x <= s.x_lo || s.shock.front_x >= s.x_hi)
    throw ConfigError("shock front lies outside the domain");
  const int front_mat = grid.material(grid.locate(s.shock.front_x));
  if (front_mat != gas && s.shock.peak_p != s.shock.ambient_p)
    throw ConfigError("shock front must start in the gas region");
  const auto shock = build_initial_shock(s.shock, s.materials.at(s.gas).rho_ref, mats.eos[gas]);
  solver.initialize([&](double x, int m) {
    if (m == gas) return shock(x);
    return PrimState{s.materials.at(mats.names[m]).rho_ref, 0.0, 0.0, s.shock.ambient_p};
  });
  for (const auto& g : s.gauges) solver.add_gauge(g.id, g.x);
  return solver;
}

Solver2D build_solver2d(const ScenarioSpec& s) {
  if (s.dims != 2) throw ConfigError("scenario '" + s.name + "' is not two-dimensional");
  Mapping mapping;
  if (s.geometry == "mapped") {
    mapping.kind = MappingKind::circular_inclusion;
    mapping.circle = s.circle;
  } else if (s.geometry != "cartesian") {
    throw ConfigError("unknown 2D geometry '" + s.geometry + "'");
  }
  const auto& d = s.domain;
  MappedGrid2D grid(s.mx, s.my, d[0], d[1], d[2], d[3], mapping);

  std::vector<std::string> used = {s.gas, s.inclusion_material};
  if (s.geometry == "mapped" && s.shell) used.push_back(s.shell_material);
  const MaterialSet mats = material_set(s, used);
  const int gas = mats.index_of(s.gas);
  grid.fill_material(gas);
  if (s.geometry == "cartesian") {
    const auto& b = s.inclusion_box;
    grid.assign_rectangle(b[0], b[1], b[2], b[3], mats.index_of(s.inclusion_material));
  } else if (s.shell) {
    grid.assign_ring_interior(s.circle.r_o / s.circle.r_m, mats.index_of(s.shell_material));
    grid.assign_ring_interior(s.circle.r_i / s.circle.r_m, mats.index_of(s.inclusion_material));
  } else {
    grid.assign_ring_interior(s.circle.r_o / s.circle.r_m, mats.index_of(s.inclusion_material));
  }

  Solver2D solver(std::move(grid), mats, s.numerics, s.bc2d);
  const auto shock = build_initial_shock(s.shock, s.materials.at(s.gas).rho_ref, mats.eos[gas]);
  solver.initialize([&](double x, double, int m) {
    if (m == gas) return shock(x);
    return PrimState{s.materials.at(mats.names[m]).rho_ref, 0.0, 0.0, s.shock.ambient_p};
  });
  for (const auto& g : s.gauges) solver.add_gauge(g.id, g.x, g.y);
  return solver;
}

std::vector<GaugePeak> gauge_report(const std::vector<Gauge>& gauges) {
  std::vector<GaugePeak> out;
  for (const Gauge& g : gauges) {
    GaugePeak peak;
    peak.id = g.id;
    peak.max_kpa = -1.0;
    for (std::size_t k = 0; k < g.p_kpa.size(); ++k)
      if (g.p_kpa[k] > peak.max_kpa) {
        peak.max_kpa = g.p_kpa[k];
        peak.t_max = g.t[k];
      }
    out.push_back(peak);
  }
  return out;
}

namespace {

std::vector<double> output_times(double t_end, int snapshots) {
  std::vector<double> t = {0.0};
  if (t_end <= 0.0) return t;
  const int n = std::max(snapshots, 2);
  for (int k = 1; k < n; ++k) t.push_back(k == n - 1 ? t_end : t_end * k / (n - 1));
  return t;
}

std::string snapshot_name(int k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%04d.csv", k);
  return buf;
}

} // namespace

RunResult run_scenario(const ScenarioSpec& spec, const std::string& dir) {
  RunResult result;
  if (!(spec.t_end >= 0.0)) throw ConfigError("run time must be non-negative");
  if (!dir.empty()) ensure_directory(dir);
  const auto times = output_times(spec.t_end, spec.snapshots);
  auto path = [&](const std::string& f) {
    result.artifacts.push_back(f);
    return dir + "/" + f;
  };

  if (spec.dims == 1) {
    Solver1D solver = build_solver1d(spec);
    solver.record_gauges();
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (k > 0) result.steps += solver.run(times[k]);
      if (!dir.empty()) solver.write_snapshot(path(snapshot_name(static_cast<int>(k))));
    }
    result.gauges = solver.gauges();
    result.t_final = solver.time();
    result.grid_variant = "uniform";
  } else {
    Solver2D solver = build_solver2d(spec);
    const MappedGrid2D& grid = solver.grid();
    result.min_kappa = grid.min_kappa();
    result.grid_variant = grid.mapping().kind == MappingKind::circular_inclusion
                              ? to_string(grid.mapping().circle.branch)
                              : grid.mapping().name();
    if (!dir.empty()) {
      std::ofstream os(path("grid.txt"));
      grid.dump(os, result.grid_variant);
    }
    solver.record_gauges();
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (k > 0) result.steps += solver.run(times[k]);
      if (!dir.empty()) solver.write_snapshot(path(snapshot_name(static_cast<int>(k))));
    }
    if (!dir.empty()) solver.write_schlieren(path("schlieren.csv"));
    result.gauges = solver.gauges();
    result.t_final = solver.time();
  }
  if (!dir.empty()) write_gauges_csv(path("gauges.csv"), result.gauges);
  result.peaks = gauge_report(result.gauges);
  return result;
}

} // namespace tammann
