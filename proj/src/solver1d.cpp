#include "tammann/solver1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tammann/error.hpp"
#include "tammann/output.hpp"

namespace tammann {

Solver1D::Solver1D(Grid1D grid, MaterialSet materials, Numerics numerics, BoundaryKind left,
                   BoundaryKind right)
    : grid_(std::move(grid)), mats_(std::move(materials)), num_(numerics), bc_left_(left),
      bc_right_(right), g_(grid_.ghosts()) {
  if ((left == BoundaryKind::periodic) != (right == BoundaryKind::periodic))
    throw ConfigError("periodic boundaries must be set on both sides");
  if (!(num_.cfl > 0.0 && num_.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  for (int m : grid_.materials())
    if (m < 0 || m >= mats_.size()) throw ConfigError("grid references an undefined material");
  q_.resize(grid_.size() + 2 * g_);
}

void Solver1D::initialize(const std::function<PrimState(double, int)>& f) {
  for (int i = 0; i < grid_.size(); ++i) {
    const PrimState w = f(grid_.center(i), grid_.material(i));
    cons(i) = prim_to_cons(w, eos_of(i));
  }
}

int Solver1D::padded_material(int k) const {
  const int n = grid_.size();
  int i = k - g_;
  if (i < 0) i = bc_left_ == BoundaryKind::periodic ? i + n : 0;
  if (i >= n) i = bc_right_ == BoundaryKind::periodic ? i - n : n - 1;
  return grid_.material(i);
}

void Solver1D::apply_boundaries() {
  const int n = grid_.size();
  for (int m = 0; m < g_; ++m) {
    // Left ghost g-1-m mirrors interior cell m.
    ConsState& gl = q_[g_ - 1 - m];
    switch (bc_left_) {
      case BoundaryKind::outflow: gl = q_[g_]; break;
      case BoundaryKind::wall:
        gl = q_[g_ + m];
        gl.mu = -gl.mu;
        break;
      case BoundaryKind::periodic: gl = q_[g_ + n - 1 - m]; break;
    }
    ConsState& gr = q_[g_ + n + m];
    switch (bc_right_) {
      case BoundaryKind::outflow: gr = q_[g_ + n - 1]; break;
      case BoundaryKind::wall:
        gr = q_[g_ + n - 1 - m];
        gr.mu = -gr.mu;
        break;
      case BoundaryKind::periodic: gr = q_[g_ + m]; break;
    }
  }
}

void Solver1D::compute_edges() {
  const int N = static_cast<int>(q_.size());
  std::vector<PrimState> w(N);
  std::vector<double> c(N);
  for (int k = 0; k < N; ++k) {
    const TammannEos& eos = mats_.eos[padded_material(k)];
    try {
      w[k] = cons_to_prim(q_[k], eos);
      c[k] = sound_speed(w[k], eos);
    } catch (const NumericalError& e) {
      throw StepFailure(std::string("inadmissible cell state: ") + e.what(), time_, k - g_);
    }
  }
  edges_.assign(N, Fluctuations{});
  info_.assign(N, EdgeInfo{});
  max_speed_ = 0.0;
  for (int k = 1; k < N; ++k) {
    EdgeInfo& e = info_[k];
    e.mat_left = padded_material(k - 1);
    e.mat_right = padded_material(k);
    e.interface = e.mat_left != e.mat_right;
    e.c_left = c[k - 1];
    e.c_right = c[k];
    try {
      edges_[k] = solve_edge(w[k - 1], w[k], mats_.eos[e.mat_left], mats_.eos[e.mat_right],
                             e.interface, num_);
    } catch (const NumericalError& err) {
      std::ostringstream msg;
      msg << "Riemann solve failed at edge " << k - g_ << ": " << err.what();
      throw StepFailure(msg.str(), time_, k - g_);
    }
    for (double s : edges_[k].speeds) max_speed_ = std::max(max_speed_, std::abs(s));
  }
}

double Solver1D::max_wave_speed() {
  apply_boundaries();
  compute_edges();
  return max_speed_;
}

double Solver1D::cfl_dt(double cfl) {
  const double s = max_wave_speed();
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  return cfl * grid_.dx() / s;
}

void Solver1D::check_cells() const {
  for (int i = 0; i < grid_.size(); ++i) {
    const PrimState w = cons_to_prim_unchecked(cons(i), eos_of(i));
    if (!is_admissible(w, eos_of(i))) {
      std::ostringstream msg;
      msg << "cell " << i << " at x=" << grid_.center(i) << " became inadmissible (rho=" << w.rho
          << ", p=" << w.p << ")";
      throw StepFailure(msg.str(), time_, i);
    }
  }
}

namespace {

// Shared cell update once edges and dt are fixed.
void update_cells(std::vector<ConsState>& q, const std::vector<Fluctuations>& edges,
                  const std::vector<std::array<Vec4, 3>>& limited, int g, int n, double dtdx,
                  bool high_order) {
  std::vector<Vec4> F(q.size(), Vec4{});
  if (high_order)
    for (int k = g; k <= g + n; ++k) F[k] = correction_flux(edges[k], limited[k], dtdx);
  for (int k = g; k < g + n; ++k) {
    Vec4 dq = dtdx * (edges[k].apdq + edges[k + 1].amdq);
    dq += dtdx * (F[k + 1] - F[k]);
    q[k] = ConsState::from_vec(q[k].vec() - dq);
  }
}

} // namespace

void Solver1D::step(double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw NumericalError("invalid time step");
  apply_boundaries();
  compute_edges();
  last_cfl_ = dt * max_speed_ / grid_.dx();
  if (last_cfl_ > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "time step " << dt << " violates CFL (" << last_cfl_ << ")";
    throw NumericalError(msg.str());
  }
  const auto limited = limit_line(edges_, info_, mats_, num_);
  update_cells(q_, edges_, limited, g_, grid_.size(), dt / grid_.dx(), num_.high_order);
  time_ += dt;
  check_cells();
}

double Solver1D::advance(double t_end) {
  apply_boundaries();
  compute_edges();
  const double remaining = t_end - time_;
  double dt = remaining;
  if (max_speed_ > 0.0) dt = std::min(dt, num_.cfl * grid_.dx() / max_speed_);
  if (!(dt > 0.0)) return 0.0;
  last_cfl_ = dt * max_speed_ / grid_.dx();
  const auto limited = limit_line(edges_, info_, mats_, num_);
  update_cells(q_, edges_, limited, g_, grid_.size(), dt / grid_.dx(), num_.high_order);
  // Land exactly on t_end when this was the final step.
  time_ = dt == remaining ? t_end : time_ + dt;
  check_cells();
  return dt;
}

int Solver1D::run(double t_end, const std::function<void(const Solver1D&)>& on_step) {
  int steps = 0;
  if (gauges_.size() && (gauges_.front().t.empty() || gauges_.front().t.back() < time_))
    record_gauges();
  while (time_ < t_end) {
    if (advance(t_end) == 0.0) break;
    ++steps;
    record_gauges();
    if (on_step) on_step(*this);
  }
  return steps;
}

Gauge& Solver1D::add_gauge(const std::string& id, double x) {
  Gauge gauge;
  gauge.id = id;
  gauge.x = x;
  gauge.cell_i = grid_.locate(x);
  gauges_.push_back(gauge);
  return gauges_.back();
}

void Solver1D::record_gauges() {
  for (Gauge& gauge : gauges_) {
    gauge.t.push_back(time_);
    gauge.p_kpa.push_back(prim(gauge.cell_i).p / 1000.0);
  }
}

std::array<double, 3> Solver1D::totals() const {
  std::array<double, 3> t{};
  for (int i = 0; i < grid_.size(); ++i) {
    t[0] += cons(i).rho;
    t[1] += cons(i).mu;
    t[2] += cons(i).E;
  }
  for (double& v : t) v *= grid_.dx();
  return t;
}

void Solver1D::write_snapshot(const std::string& path) const {
  CsvWriter csv(path, {"x_m", "rho", "u", "p_kPa", "material"});
  for (int i = 0; i < grid_.size(); ++i) {
    const PrimState w = prim(i);
    csv << grid_.center(i) << w.rho << w.u << w.p / 1000.0 << mats_.names[grid_.material(i)];
    csv.end_row();
  }
}

void write_gauges_csv(const std::string& path, const std::vector<Gauge>& gauges) {
  CsvWriter csv(path, {"time_s", "gauge_id", "pressure_kPa"});
  for (const Gauge& g : gauges)
    for (std::size_t k = 0; k < g.t.size(); ++k) {
      csv << g.t[k] << g.id << g.p_kpa[k];
      csv.end_row();
    }
}

} // namespace tammann
