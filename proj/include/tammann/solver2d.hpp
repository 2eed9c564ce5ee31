#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "tammann/mapped_grid.hpp"
#include "tammann/numerics.hpp"
#include "tammann/solver1d.hpp"

namespace tammann {

/// Up- and down-going parts of a normal fluctuation entering a cell.
struct TransverseFluctuations {
  Vec4 up{};
  Vec4 down{};
};

/// Acoustic transverse splitting of fluctuation A entering a cell with sound
/// speed c2. c1 / c3 are the sound speeds of the cells across the lower and
/// upper transverse edges, whose unit normals are n_lower and n_upper.
/// h1 / h3 are the specific total enthalpies (E + p)/rho of those cells and
/// fill the energy row; zero leaves it empty.
TransverseFluctuations transverse_fluctuations(const Vec4& A, double c1, double c2, double c3,
                                               std::array<double, 2> n_lower,
                                               std::array<double, 2> n_upper, double h1 = 0.0,
                                               double h3 = 0.0);

/// Geometric source of the axisymmetric equations, y being the radius:
/// dq/dt = -(1/r) [rho v, rho u v, rho v^2, v (E + p)].
Vec4 axisymmetric_source(const ConsState& q, const TammannEos& eos, double r);

/// Explicit midpoint update of the source ODE over dt.
ConsState axisymmetric_source_step(const ConsState& q, const TammannEos& eos, double r,
                                   double dt);

/// Boundary kinds in the order left, right, bottom, top.
using Boundaries2D = std::array<BoundaryKind, 4>;

/// 2D wave-propagation solver on a mapped grid. x is the axial coordinate,
/// y the radial one when the axisymmetric source is enabled.
class Solver2D {
public:
  Solver2D(MappedGrid2D grid, MaterialSet materials, Numerics numerics, Boundaries2D bc);

  const MappedGrid2D& grid() const { return grid_; }
  const MaterialSet& materials() const { return mats_; }
  const Numerics& numerics() const { return num_; }
  double time() const { return time_; }

  /// Sets each interior cell from f(centroid x, centroid y, material).
  void initialize(const std::function<PrimState(double, double, int)>& f);

  int material(int i, int j) const { return mat_[pidx(i, j)]; }
  const TammannEos& eos_of(int i, int j) const { return mats_.eos[material(i, j)]; }
  ConsState& cons(int i, int j) { return q_[pidx(i, j)]; }
  const ConsState& cons(int i, int j) const { return q_[pidx(i, j)]; }
  PrimState prim(int i, int j) const { return cons_to_prim(cons(i, j), eos_of(i, j)); }

  void apply_boundaries();

  /// max |s| gamma / (kappa dx) over all edges; dt = cfl / rate.
  double cfl_rate();
  double cfl_dt(double cfl);

  /// Homogeneous (no source) update with a fixed dt.
  void hyperbolic_step(double dt);

  /// Source update over dt on interior cells; no-op when disabled.
  void source_step(double dt);

  /// Full step with source splitting. Throws NumericalError on CFL > 1.
  void step(double dt);

  /// CFL-limited step up to t_end with retry if the post-source CFL exceeds
  /// one. Returns dt taken.
  double advance(double t_end);

  int run(double t_end, const std::function<void(const Solver2D&)>& on_step = {});

  Gauge& add_gauge(const std::string& id, double x, double y);
  std::vector<Gauge>& gauges() { return gauges_; }
  const std::vector<Gauge>& gauges() const { return gauges_; }
  void record_gauges();

  /// Capacity-weighted planar totals of the four conserved variables.
  Vec4 totals() const;

  /// Cell-centred |grad p| (Pa/m) by the Green-Gauss rule.
  std::vector<double> pressure_gradient_magnitude();

  void write_snapshot(const std::string& path) const;
  void write_schlieren(const std::string& path);

  double last_cfl() const { return last_cfl_; }

private:
  int pidx(int i, int j) const { return (j + g_) * px_ + (i + g_); }
  int fidx(int i, int j) const { return (j + g_) * (px_ + 1) + (i + g_); }
  void check_cells() const;
  void prepare_cells();
  void reflect(ConsState& q, std::array<double, 2> n) const;

  // Riemann solves and limiting for x-edge rows j_lo..j_hi and y-edge
  // columns i_lo..i_hi; returns the CFL rate of the solved edges.
  double solve_x_edges(int j_lo, int j_hi);
  double solve_y_edges(int i_lo, int i_hi);
  double enthalpy(int kc, int k) const;
  void accumulate_x(double dt, bool transverse);
  void accumulate_y(double dt, bool transverse);
  void apply_increments(double dt, bool use_f, bool use_g);
  bool try_hyperbolic(double dt, bool edges_fresh, double& rate_used);

  struct Line {
    int fixed = 0;  // row (x-lines) or column (y-lines)
    std::vector<Fluctuations> f;
    std::vector<std::array<Vec4, 3>> limited;
  };

  MappedGrid2D grid_;
  MaterialSet mats_;
  Numerics num_;
  Boundaries2D bc_;
  int g_ = 2;
  int px_, py_;
  std::vector<ConsState> q_;
  std::vector<int> mat_;
  std::vector<PrimState> w_;  // scratch: primitive states of padded cells
  std::vector<double> c_;     // scratch: sound speeds of padded cells
  std::vector<Line> xlines_, ylines_;
  std::vector<Vec4> dq_, F_, G_;
  double time_ = 0.0;
  double last_cfl_ = 0.0;
  std::vector<Gauge> gauges_;
};

} // namespace tammann
