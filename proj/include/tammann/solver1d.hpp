#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tammann/grid1d.hpp"
#include "tammann/numerics.hpp"

namespace tammann {

/// Pressure probe. Samples are (time s, cell-centred pressure kPa absolute).
struct Gauge {
  std::string id;
  double x = 0.0;
  double y = 0.0;
  int cell_i = 0;
  int cell_j = 0;
  std::vector<double> t;
  std::vector<double> p_kpa;
};

/// 1D wave-propagation solver. Owns the cell averages (with ghosts) of one
/// run; the material layout comes from the grid and never changes.
class Solver1D {
public:
  Solver1D(Grid1D grid, MaterialSet materials, Numerics numerics,
           BoundaryKind left = BoundaryKind::outflow, BoundaryKind right = BoundaryKind::outflow);

  const Grid1D& grid() const { return grid_; }
  const MaterialSet& materials() const { return mats_; }
  const Numerics& numerics() const { return num_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  /// Sets every interior cell from f(x_center, material index).
  void initialize(const std::function<PrimState(double, int)>& f);

  const TammannEos& eos_of(int i) const { return mats_.eos[grid_.material(i)]; }
  ConsState& cons(int i) { return q_[i + g_]; }
  const ConsState& cons(int i) const { return q_[i + g_]; }
  PrimState prim(int i) const { return cons_to_prim(cons(i), eos_of(i)); }

  void apply_boundaries();

  /// Largest |speed| over all edges of the current state.
  double max_wave_speed();

  /// cfl * dx / max speed; +inf for a state with no wave motion.
  double cfl_dt(double cfl);

  /// One update with the given dt. Throws NumericalError if dt violates
  /// CFL <= 1 and StepFailure if a cell becomes inadmissible.
  void step(double dt);

  /// One CFL-limited step not going past t_end; returns dt taken.
  double advance(double t_end);

  /// Runs to t_end, recording gauges after every accepted step.
  int run(double t_end, const std::function<void(const Solver1D&)>& on_step = {});

  Gauge& add_gauge(const std::string& id, double x);
  std::vector<Gauge>& gauges() { return gauges_; }
  const std::vector<Gauge>& gauges() const { return gauges_; }
  void record_gauges();

  /// Total mass, x-momentum and energy over interior cells (times dx).
  std::array<double, 3> totals() const;

  /// Columns x_m, rho, u, p_kPa, material.
  void write_snapshot(const std::string& path) const;

  double last_cfl() const { return last_cfl_; }

private:
  int edge_count() const { return static_cast<int>(q_.size()) - 1; }
  int padded_material(int k) const;
  void compute_edges();
  void check_cells() const;

  Grid1D grid_;
  MaterialSet mats_;
  Numerics num_;
  BoundaryKind bc_left_, bc_right_;
  int g_;
  std::vector<ConsState> q_;
  std::vector<Fluctuations> edges_;
  std::vector<EdgeInfo> info_;
  double max_speed_ = 0.0;
  double time_ = 0.0;
  double last_cfl_ = 0.0;
  std::vector<Gauge> gauges_;
};

void write_gauges_csv(const std::string& path, const std::vector<Gauge>& gauges);

} // namespace tammann
