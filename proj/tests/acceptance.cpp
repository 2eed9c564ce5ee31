// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "tammann/acoustics.hpp"
#include "tammann/error.hpp"
#include "tammann/limiters.hpp"
#include "tammann/riemann_exact.hpp"
#include "tammann/scenarios.hpp"

using namespace tammann;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

const Gauge& gauge(const std::vector<Gauge>& gs, const std::string& id) {
  for (const auto& g : gs)
    if (g.id == id) return g;
  throw ConfigError("no gauge '" + id + "'");
}

double peak(const std::vector<Gauge>& gs, const std::string& id) {
  const Gauge& g = gauge(gs, id);
  return *std::max_element(g.p_kpa.begin(), g.p_kpa.end());
}

// L1 distance in time of two gauge records on a common uniform time base.
double gauge_distance(const Gauge& a, const Gauge& b, double t_end) {
  std::vector<double> t(2001);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = t_end * k / (t.size() - 1);
  const auto va = oracle::resample(a.t, a.p_kpa, t), vb = oracle::resample(b.t, b.p_kpa, t);
  double s = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) s += std::abs(va[k] - vb[k]);
  return s * t_end / (t.size() - 1);
}

// Runs shared between criteria.
std::map<std::string, std::vector<Gauge>> g_runs;

const std::vector<Gauge>& run_1d(const std::string& key, const ScenarioSpec& spec) {
  auto it = g_runs.find(key);
  if (it == g_runs.end()) it = g_runs.emplace(key, run_scenario(spec).gauges).first;
  return it->second;
}

ScenarioSpec air_water(int cells) {
  ScenarioSpec s = air_water_1d();
  s.cells = cells;
  return s;
}

struct Run2D {
  std::vector<Gauge> gauges;
  double water_tv = 0.0;
};

// Total variation of pressure over edges with water on both sides.
double water_pressure_tv(const Solver2D& s) {
  const int w = s.materials().index_of("water");
  const int mx = s.grid().mx(), my = s.grid().my();
  double tv = 0.0;
  for (int j = 0; j < my; ++j)
    for (int i = 0; i < mx; ++i) {
      if (s.material(i, j) != w) continue;
      const double p = s.prim(i, j).p;
      if (i + 1 < mx && s.material(i + 1, j) == w) tv += std::abs(s.prim(i + 1, j).p - p);
      if (j + 1 < my && s.material(i, j + 1) == w) tv += std::abs(s.prim(i, j + 1).p - p);
    }
  return tv;
}

std::map<std::string, Run2D> g_runs2d;

const Run2D& run_2d(const std::string& key, const ScenarioSpec& spec) {
  auto it = g_runs2d.find(key);
  if (it != g_runs2d.end()) return it->second;
  Solver2D s = build_solver2d(spec);
  s.record_gauges();
  s.run(spec.t_end);
  return g_runs2d.emplace(key, Run2D{s.gauges(), water_pressure_tv(s)}).first->second;
}

ScenarioSpec cylinder(int mx) {
  ScenarioSpec s = cartesian_cylinder_2d();
  s.mx = mx;
  s.my = mx / 2;
  return s;
}

// 1. Exact Riemann solver properties on random states.
Outcome criterion1() {
  const props::ExactReport r = props::exact_solver_properties(1000, 20261018);
  return {r.passes(), r.summary()};
}

// 2. Sod star state against the bisection oracle and the reference values.
Outcome criterion2() {
  const TammannEos ideal{1.4, 0.0, "ideal"};
  const RiemannFan fan = solve_star({1, 0, 0, 1}, {0.125, 0, 0, 0.1}, ideal, ideal);
  const oracle::Star ref = oracle::star_bisection({1, 0, 1}, {0.125, 0, 0.1}, {1.4, 0}, {1.4, 0});
  const double dp = std::abs(fan.p_star - ref.p), du = std::abs(fan.u_star - ref.u);
  const bool ok = dp < 1e-10 && du < 1e-10 && std::abs(fan.p_star - 0.30313) < 1e-4 &&
                  std::abs(fan.u_star - 0.92745) < 1e-4;
  return {ok, fmt("p*=%.6f u*=%.6f, |oracle diff| p %.1e u %.1e", fan.p_star, fan.u_star, dp, du)};
}

// 3. Air-water transmitted peak ratio.
Outcome criterion3() {
  const auto& gs = run_1d("aw2000", air_water(2000));
  const double g1 = peak(gs, "1"), g4 = peak(gs, "4");
  const double ratio = g4 / g1;
  return {std::abs(ratio / 1.544 - 1.0) <= 0.05,
          fmt("gauge4/gauge1 = %.2f/%.2f kPa = %.4f, target 1.544 +-5%%", g4, g1, ratio)};
}

// 4. Thin plastic layers change the water peak less as they thin.
Outcome criterion4() {
  const double g0 = peak(run_1d("aw2000", air_water(2000)), "4");
  std::map<double, double> d;
  for (double w : {0.6, 0.2, 0.1}) {
    const auto& gs = run_1d(fmt("apw%.1f", w), air_plastic_water_1d(w));
    d[w] = std::abs(peak(gs, "4") - g0) / g0;
  }
  const bool ok = d[0.1] <= 0.01 && std::max(d[0.2], d[0.1]) <= d[0.6] + 1e-3;
  return {ok, fmt("relative peak change vs no layer: 0.6 m %.3e, 0.2 m %.3e, 0.1 m %.3e",
                  d[0.6], d[0.2], d[0.1])};
}

// 5. Weak shock transmission approaches the linear acoustic coefficient.
Outcome criterion5() {
  ScenarioSpec s = air_water(2000);
  s.shock.peak_p = s.shock.ambient_p + 100.0;
  // The weak front moves near the sound speed; the reflection from the
  // interface returns to gauge 1 only after 0.03 s.
  s.t_end = 0.02;
  const auto& gs = run_1d("weak", s);
  const double amb = s.shock.ambient_p / 1000.0;
  const double inc = peak(gs, "1") - amb, trans = peak(gs, "4") - amb;
  const MaterialTable& m = s.materials;
  const double za = acoustic_medium(m.at("air").rho_ref, s.shock.ambient_p, m.at("air").eos).impedance();
  const double zw =
      acoustic_medium(m.at("water").rho_ref, s.shock.ambient_p, m.at("water").eos).impedance();
  const double expect = total_transmission(za, zw);
  const double ratio = trans / inc;
  return {std::abs(ratio / expect - 1.0) <= 0.02,
          fmt("overpressure ratio %.5f vs 2Zw/(Zw+Za) = %.5f (incident %.2f Pa)", ratio, expect,
              1000.0 * inc)};
}

// 6. Layer series against independent bounce bookkeeping.
Outcome criterion6() {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> lz(std::log(10.0), std::log(1e7));
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double za = std::exp(lz(rng)), zp = std::exp(lz(rng)), zw = std::exp(lz(rng));
    const double a = partial_transmission(za, zp, zw, 50), b = oracle::bounce_sum(za, zp, zw, 50);
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
  }
  return {worst <= 1e-10, fmt("100 impedance triples, N=50, worst relative diff %.2e", worst)};
}

// 7. Free-stream preservation on the mapped grid.
Outcome criterion7() {
  Mapping map;
  map.kind = MappingKind::circular_inclusion;
  map.circle.branch = OuterBranch::automatic;
  MaterialSet water;
  water.add("water", {7.15, 3.0e8, "water"}, true);
  const Boundaries2D bc{BoundaryKind::outflow, BoundaryKind::outflow, BoundaryKind::wall,
                        BoundaryKind::outflow};
  auto drift = [&](bool axi, double u) {
    Numerics num;
    num.axisymmetric = axi;
    Solver2D s(MappedGrid2D(160, 80, -1.0, 1.0, 0.0, 1.0, map), water, num, bc);
    const PrimState w0{1000.0, u, 0.0, kAtmosphere};
    s.initialize([&](double, double, int) { return w0; });
    const ConsState q0 = prim_to_cons(w0, water.eos[0]);
    const double scale[4] = {q0.rho, q0.E, q0.E / 1500.0, q0.E / 1500.0};
    for (int k = 0; k < 100; ++k) {
      const double dt = s.cfl_dt(0.9);
      s.step(std::isfinite(dt) ? dt : 1e-7);
    }
    double worst = 0.0;
    for (int j = 0; j < 80; ++j)
      for (int i = 0; i < 160; ++i) {
        const ConsState q = s.cons(i, j);
        worst = std::max({worst, std::abs(q.rho - q0.rho) / scale[0],
                          std::abs(q.E - q0.E) / scale[1], std::abs(q.mu - q0.mu) / scale[2],
                          std::abs(q.mv) / scale[3]});
      }
    return worst;
  };
  const double a = drift(false, 10.0), b = drift(true, 0.0);
  return {a <= 1e-12 && b <= 1e-12,
          fmt("100 steps, max relative drift: source off %.2e, source on at rest %.2e", a, b)};
}

// 8. Conservation in a wall-bounded single-material box.
Outcome criterion8() {
  const TammannEos air{1.4, 0.0, "air"};
  MaterialSet one;
  one.add("air", air, false);
  auto init = [](double x) {
    return PrimState{1.2 + 0.6 * std::exp(-50 * (x - 0.3) * (x - 0.3)), 40.0 * std::sin(5 * x), 0.0,
                     1e5 * (1.0 + std::exp(-80 * (x - 0.4) * (x - 0.4)))};
  };
  Solver1D box(Grid1D(0.0, 1.0, 400), one, Numerics{}, BoundaryKind::wall, BoundaryKind::wall);
  box.initialize([&](double x, int) { return init(x); });
  double dm = 0.0, de = 0.0;
  for (int k = 0; k < 300; ++k) {
    const auto a = box.totals();
    box.advance(1.0);
    const auto b = box.totals();
    dm = std::max(dm, std::abs(b[0] - a[0]) / a[0]);
    de = std::max(de, std::abs(b[2] - a[2]) / a[2]);
  }
  // Momentum: a mirror-symmetric box, where the two wall impulses cancel.
  Solver1D sym(Grid1D(-0.5, 0.5, 400), one, Numerics{}, BoundaryKind::wall, BoundaryKind::wall);
  sym.initialize([&](double x, int) {
    PrimState w = init(std::abs(x));
    if (x < 0) w.u = -w.u;
    return w;
  });
  double dmu = 0.0;
  for (int k = 0; k < 300; ++k) {
    sym.advance(1.0);
    double scale = 0.0;
    for (int i = 0; i < 400; ++i) scale += std::abs(sym.cons(i).mu) * sym.grid().dx();
    dmu = std::max(dmu, std::abs(sym.totals()[1]) / scale);
  }
  const bool ok = dm <= 1e-12 && de <= 1e-12 && dmu <= 1e-12;
  return {ok, fmt("300 steps, worst per-step relative change: mass %.1e, energy %.1e, momentum %.1e",
                  dm, de, dmu)};
}

// 9. Grid convergence of gauge records.
Outcome criterion9() {
  const double t1 = air_water_1d().t_end;
  const auto& a = run_1d("aw500", air_water(500));
  const auto& b = run_1d("aw1000", air_water(1000));
  const auto& c = run_1d("aw2000", air_water(2000));
  const double e1 = gauge_distance(gauge(a, "4"), gauge(b, "4"), t1);
  const double e2 = gauge_distance(gauge(b, "4"), gauge(c, "4"), t1);
  const double order = std::log2(e1 / e2);

  const double t2 = cartesian_cylinder_2d().t_end;
  const auto& r80 = run_2d("cyl80", cylinder(80)).gauges;
  const auto& r160 = run_2d("cyl160", cylinder(160)).gauges;
  const auto& r320 = run_2d("cyl320", cylinder(320)).gauges;
  bool decreasing = true;
  std::string diffs;
  for (const char* id : {"1", "air"}) {
    const double d1 = gauge_distance(gauge(r80, id), gauge(r160, id), t2);
    const double d2 = gauge_distance(gauge(r160, id), gauge(r320, id), t2);
    decreasing = decreasing && d2 < d1;
    diffs += fmt(" %s %.3g>%.3g", id, d1, d2);
  }
  return {order >= 0.8 && decreasing,
          fmt("1D gauge 4 order %.2f; 2D gauge differences (kPa s):%s", order, diffs.c_str())};
}

// 10. Limiter definitions and the transmission-based limiter's effect.
Outcome criterion10() {
  bool pointwise = true;
  for (double t = -2.0; t <= 4.0; t += 0.125) {
    const double mm = t <= 0 ? 0 : std::min(t, 1.0);
    const double mc = std::max(0.0, std::min({0.5 * (1 + t), 2.0, 2 * t}));
    const double vl = t <= 0 ? 0 : 2 * t / (1 + t);
    pointwise = pointwise && flux_limiter(t, {LimiterKind::minmod}) == mm &&
                std::abs(flux_limiter(t, {LimiterKind::mc}) - mc) < 1e-15 &&
                std::abs(flux_limiter(t, {LimiterKind::vanleer}) - vl) < 1e-15 &&
                std::abs(flux_limiter(t, {LimiterKind::modified_minmod, 1.0 / 3.0}) -
                         (t <= 0 ? 0 : std::min(t / 3.0, 1.0))) < 1e-15;
  }
  double equal_c = 0.0;
  const double c = 1500.0;
  for (double a_here : {0.3, -0.7, 1.1})
    for (double a_up : {0.9, -0.2, 2.5}) {
      const Vec4 here{a_here, c * a_here, 0, 0}, up{a_up, c * a_up, 0, 0};
      const double tt = theta_transmission(a_up, a_here, c, c, WaveFamily::right_acoustic);
      equal_c = std::max(equal_c, std::abs(tt - theta_standard(here, up)));
    }
  const double tv_default = run_2d("cyl160", cylinder(160)).water_tv;
  ScenarioSpec plain = cylinder(160);
  plain.numerics.theta_policy = ThetaPolicy::standard_projection;
  plain.numerics.stiff_limiter.kind = LimiterKind::minmod;
  const double tv_plain = run_2d("cyl160plain", plain).water_tv;
  const bool ok = pointwise && equal_c < 1e-12 && tv_default <= tv_plain;
  return {ok, fmt("pointwise %s, equal-c theta diff %.1e, water pressure TV %.4g (default) vs %.4g "
                  "(standard + minmod) Pa",
                  pointwise ? "ok" : "mismatch", equal_c, tv_default, tv_plain)};
}

} // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", k + 1, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
