#include "tammann/solver2d.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "tammann/error.hpp"
#include "tammann/output.hpp"

namespace tammann {

TransverseFluctuations transverse_fluctuations(const Vec4& A, double c1, double c2, double c3,
                                               std::array<double, 2> n2,
                                               std::array<double, 2> n3, double h1, double h3) {
  TransverseFluctuations t;
  const double up = c3 * (c2 * A[0] + n3[0] * A[1] + n3[1] * A[2]) / (c3 + c2);
  t.up = {up, up * n3[0] * c3, up * n3[1] * c3, up * h3};
  const double down = -c1 * (c2 * A[0] - n2[0] * A[1] - n2[1] * A[2]) / (c1 + c2);
  t.down = {down, -down * n2[0] * c1, -down * n2[1] * c1, down * h1};
  return t;
}

Vec4 axisymmetric_source(const ConsState& q, const TammannEos& eos, double r) {
  const PrimState w = cons_to_prim_unchecked(q, eos);
  const double inv = 1.0 / r;
  return {-q.mv * inv, -q.mu * w.v * inv, -q.mv * w.v * inv, -w.v * (q.E + w.p) * inv};
}

ConsState axisymmetric_source_step(const ConsState& q, const TammannEos& eos, double r,
                                   double dt) {
  if (q.mv == 0.0) return q;
  const Vec4 k1 = axisymmetric_source(q, eos, r);
  const ConsState half = ConsState::from_vec(q.vec() + (0.5 * dt) * k1);
  const Vec4 k2 = axisymmetric_source(half, eos, r);
  return ConsState::from_vec(q.vec() + dt * k2);
}

Solver2D::Solver2D(MappedGrid2D grid, MaterialSet materials, Numerics numerics, Boundaries2D bc)
    : grid_(std::move(grid)), mats_(std::move(materials)), num_(numerics), bc_(bc) {
  if ((bc_[0] == BoundaryKind::periodic) != (bc_[1] == BoundaryKind::periodic) ||
      (bc_[2] == BoundaryKind::periodic) != (bc_[3] == BoundaryKind::periodic))
    throw ConfigError("periodic boundaries must be paired");
  if (!(num_.cfl > 0.0 && num_.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  const int mx = grid_.mx(), my = grid_.my();
  px_ = mx + 2 * g_;
  py_ = my + 2 * g_;
  q_.resize(px_ * py_);
  mat_.assign(px_ * py_, 0);
  for (int j = -g_; j < my + g_; ++j)
    for (int i = -g_; i < mx + g_; ++i) {
      int ii = i, jj = j;
      if (ii < 0) ii = bc_[0] == BoundaryKind::periodic ? ii + mx : 0;
      if (ii >= mx) ii = bc_[1] == BoundaryKind::periodic ? ii - mx : mx - 1;
      if (jj < 0) jj = bc_[2] == BoundaryKind::periodic ? jj + my : 0;
      if (jj >= my) jj = bc_[3] == BoundaryKind::periodic ? jj - my : my - 1;
      const int m = grid_.material(ii, jj);
      if (m < 0 || m >= mats_.size()) throw ConfigError("grid references an undefined material");
      mat_[pidx(i, j)] = m;
    }
  if (num_.axisymmetric)
    for (int j = 0; j < my; ++j)
      for (int i = 0; i < mx; ++i)
        if (!(grid_.centroid_y(i, j) > 0.0))
          throw ConfigError("axisymmetric runs need every cell centroid at y > 0");
  w_.resize(q_.size());
  c_.resize(q_.size());
  dq_.resize(q_.size());
  F_.resize((px_ + 1) * py_);
  G_.resize(px_ * (py_ + 1));
}

void Solver2D::initialize(const std::function<PrimState(double, double, int)>& f) {
  for (int j = 0; j < grid_.my(); ++j)
    for (int i = 0; i < grid_.mx(); ++i) {
      const PrimState w = f(grid_.centroid_x(i, j), grid_.centroid_y(i, j), material(i, j));
      cons(i, j) = prim_to_cons(w, eos_of(i, j));
    }
}

void Solver2D::reflect(ConsState& q, std::array<double, 2> n) const {
  const double mn = q.mu * n[0] + q.mv * n[1];
  q.mu -= 2.0 * mn * n[0];
  q.mv -= 2.0 * mn * n[1];
}

void Solver2D::apply_boundaries() {
  const int mx = grid_.mx(), my = grid_.my();
  for (int j = 0; j < my; ++j)
    for (int m = 0; m < g_; ++m) {
      ConsState& l = q_[pidx(-1 - m, j)];
      switch (bc_[0]) {
        case BoundaryKind::outflow: l = cons(0, j); break;
        case BoundaryKind::wall:
          l = cons(m, j);
          reflect(l, grid_.x_normal(0, j));
          break;
        case BoundaryKind::periodic: l = cons(mx - 1 - m, j); break;
      }
      ConsState& r = q_[pidx(mx + m, j)];
      switch (bc_[1]) {
        case BoundaryKind::outflow: r = cons(mx - 1, j); break;
        case BoundaryKind::wall:
          r = cons(mx - 1 - m, j);
          reflect(r, grid_.x_normal(mx, j));
          break;
        case BoundaryKind::periodic: r = cons(m, j); break;
      }
    }
  for (int i = -g_; i < mx + g_; ++i)
    for (int m = 0; m < g_; ++m) {
      ConsState& b = q_[pidx(i, -1 - m)];
      switch (bc_[2]) {
        case BoundaryKind::outflow: b = q_[pidx(i, 0)]; break;
        case BoundaryKind::wall:
          b = q_[pidx(i, m)];
          reflect(b, grid_.y_normal(i, 0));
          break;
        case BoundaryKind::periodic: b = q_[pidx(i, my - 1 - m)]; break;
      }
      ConsState& t = q_[pidx(i, my + m)];
      switch (bc_[3]) {
        case BoundaryKind::outflow: t = q_[pidx(i, my - 1)]; break;
        case BoundaryKind::wall:
          t = q_[pidx(i, my - 1 - m)];
          reflect(t, grid_.y_normal(i, my));
          break;
        case BoundaryKind::periodic: t = q_[pidx(i, m)]; break;
      }
    }
}

void Solver2D::prepare_cells() {
  const int mx = grid_.mx(), my = grid_.my();
  for (int j = -g_; j < my + g_; ++j)
    for (int i = -g_; i < mx + g_; ++i) {
      const int k = pidx(i, j);
      const TammannEos& eos = mats_.eos[mat_[k]];
      try {
        w_[k] = cons_to_prim(q_[k], eos);
        c_[k] = sound_speed(w_[k], eos);
      } catch (const NumericalError& e) {
        throw StepFailure(std::string("inadmissible cell state: ") + e.what(), time_, i, j);
      }
    }
}

namespace {

PrimState rotate_prim(const PrimState& w, std::array<double, 2> n) {
  return {w.rho, n[0] * w.u + n[1] * w.v, -n[1] * w.u + n[0] * w.v, w.p};
}

// Brings an edge solution back to the physical frame and scales it by the
// edge-length ratio.
void to_physical(Fluctuations& f, std::array<double, 2> n, double gamma) {
  for (auto& w : f.waves) w = rotate_from_normal(w, n[0], n[1]);
  f.amdq = gamma * rotate_from_normal(f.amdq, n[0], n[1]);
  f.apdq = gamma * rotate_from_normal(f.apdq, n[0], n[1]);
  for (auto& s : f.speeds) s *= gamma;
}

} // namespace

double Solver2D::solve_x_edges(int j_lo, int j_hi) {
  const int mx = grid_.mx();
  xlines_.clear();
  double rate = 0.0;
  for (int j = j_lo; j <= j_hi; ++j) {
    Line line;
    line.fixed = j;
    line.f.resize(mx + 3);
    std::vector<EdgeInfo> info(mx + 3);
    for (int i = -1; i <= mx + 1; ++i) {
      const int kl = pidx(i - 1, j), kr = pidx(i, j);
      const auto n = grid_.x_normal(i, j);
      const double gam = grid_.x_gamma(i, j);
      EdgeInfo& e = info[i + 1];
      e.mat_left = mat_[kl];
      e.mat_right = mat_[kr];
      e.interface = e.mat_left != e.mat_right;
      e.c_left = c_[kl];
      e.c_right = c_[kr];
      e.nx = n[0];
      e.ny = n[1];
      Fluctuations f;
      try {
        f = solve_edge(rotate_prim(w_[kl], n), rotate_prim(w_[kr], n), mats_.eos[e.mat_left],
                       mats_.eos[e.mat_right], e.interface, num_);
      } catch (const NumericalError& err) {
        throw StepFailure(std::string("x-edge Riemann solve failed: ") + err.what(), time_, i, j);
      }
      to_physical(f, n, gam);
      const double kmin = std::min(grid_.kappa(i - 1, j), grid_.kappa(i, j));
      for (double s : f.speeds) rate = std::max(rate, std::abs(s) / (kmin * grid_.dxc()));
      line.f[i + 1] = f;
    }
    line.limited = limit_line(line.f, info, mats_, num_);
    xlines_.push_back(std::move(line));
  }
  return rate;
}

double Solver2D::solve_y_edges(int i_lo, int i_hi) {
  const int my = grid_.my();
  ylines_.clear();
  double rate = 0.0;
  for (int i = i_lo; i <= i_hi; ++i) {
    Line line;
    line.fixed = i;
    line.f.resize(my + 3);
    std::vector<EdgeInfo> info(my + 3);
    for (int j = -1; j <= my + 1; ++j) {
      const int kl = pidx(i, j - 1), kr = pidx(i, j);
      const auto n = grid_.y_normal(i, j);
      const double gam = grid_.y_gamma(i, j);
      EdgeInfo& e = info[j + 1];
      e.mat_left = mat_[kl];
      e.mat_right = mat_[kr];
      e.interface = e.mat_left != e.mat_right;
      e.c_left = c_[kl];
      e.c_right = c_[kr];
      e.nx = n[0];
      e.ny = n[1];
      Fluctuations f;
      try {
        f = solve_edge(rotate_prim(w_[kl], n), rotate_prim(w_[kr], n), mats_.eos[e.mat_left],
                       mats_.eos[e.mat_right], e.interface, num_);
      } catch (const NumericalError& err) {
        throw StepFailure(std::string("y-edge Riemann solve failed: ") + err.what(), time_, i, j);
      }
      to_physical(f, n, gam);
      const double kmin = std::min(grid_.kappa(i, j - 1), grid_.kappa(i, j));
      for (double s : f.speeds) rate = std::max(rate, std::abs(s) / (kmin * grid_.dyc()));
      line.f[j + 1] = f;
    }
    line.limited = limit_line(line.f, info, mats_, num_);
    ylines_.push_back(std::move(line));
  }
  return rate;
}

// Energy carried by a transverse wave leaving cell kc into neighbour k. A
// transverse correction is a flux shared by both cells, so across a material
// interface the row is dropped: the enthalpies differ by the p_inf offsets.
double Solver2D::enthalpy(int kc, int k) const {
  if (num_.transverse_energy == TransverseEnergy::zero || mat_[kc] != mat_[k]) return 0.0;
  return (q_[k].E + w_[k].p) / q_[k].rho;
}

void Solver2D::accumulate_x(double dt, bool transverse) {
  const int mx = grid_.mx();
  const double dx = grid_.dxc();
  for (const Line& line : xlines_) {
    const int j = line.fixed;
    for (int i = 0; i <= mx; ++i) {
      const Fluctuations& f = line.f[i + 1];
      const double dtdx_l = dt / (grid_.kappa(i - 1, j) * dx);
      const double dtdx_r = dt / (grid_.kappa(i, j) * dx);
      dq_[pidx(i - 1, j)] += dtdx_l * f.amdq;
      dq_[pidx(i, j)] += dtdx_r * f.apdq;
      if (num_.high_order)
        F_[fidx(i, j)] += correction_flux(f, line.limited[i + 1], 0.5 * (dtdx_l + dtdx_r));
      if (!transverse) continue;
      // Right-going fluctuation enters cell (i, j), left-going enters (i-1, j).
      for (int side = 0; side < 2; ++side) {
        const int ic = side == 0 ? i : i - 1;
        const Vec4& A = side == 0 ? f.apdq : f.amdq;
        const double w = 0.5 * (side == 0 ? dtdx_r : dtdx_l);
        const int kd = pidx(ic, j - 1), kc = pidx(ic, j), ku = pidx(ic, j + 1);
        const auto t = transverse_fluctuations(A, c_[kd], c_[kc], c_[ku],
                                               grid_.y_normal(ic, j), grid_.y_normal(ic, j + 1),
                                               enthalpy(kc, kd), enthalpy(kc, ku));
        G_[pidx(ic, j + 1)] -= (w * grid_.y_gamma(ic, j + 1)) * t.up;
        G_[pidx(ic, j)] -= (w * grid_.y_gamma(ic, j)) * t.down;
      }
    }
  }
}

void Solver2D::accumulate_y(double dt, bool transverse) {
  const int my = grid_.my();
  const double dy = grid_.dyc();
  for (const Line& line : ylines_) {
    const int i = line.fixed;
    for (int j = 0; j <= my; ++j) {
      const Fluctuations& f = line.f[j + 1];
      const double dtdy_l = dt / (grid_.kappa(i, j - 1) * dy);
      const double dtdy_r = dt / (grid_.kappa(i, j) * dy);
      dq_[pidx(i, j - 1)] += dtdy_l * f.amdq;
      dq_[pidx(i, j)] += dtdy_r * f.apdq;
      if (num_.high_order)
        G_[pidx(i, j)] += correction_flux(f, line.limited[j + 1], 0.5 * (dtdy_l + dtdy_r));
      if (!transverse) continue;
      for (int side = 0; side < 2; ++side) {
        const int jc = side == 0 ? j : j - 1;
        const Vec4& A = side == 0 ? f.apdq : f.amdq;
        const double w = 0.5 * (side == 0 ? dtdy_r : dtdy_l);
        const int kd = pidx(i - 1, jc), kc = pidx(i, jc), ku = pidx(i + 1, jc);
        const auto t = transverse_fluctuations(A, c_[kd], c_[kc], c_[ku],
                                               grid_.x_normal(i, jc), grid_.x_normal(i + 1, jc),
                                               enthalpy(kc, kd), enthalpy(kc, ku));
        F_[fidx(i + 1, jc)] -= (w * grid_.x_gamma(i + 1, jc)) * t.up;
        F_[fidx(i, jc)] -= (w * grid_.x_gamma(i, jc)) * t.down;
      }
    }
  }
}

void Solver2D::apply_increments(double dt, bool use_f, bool use_g) {
  const int mx = grid_.mx(), my = grid_.my();
  for (int j = 0; j < my; ++j)
    for (int i = 0; i < mx; ++i) {
      const double k = grid_.kappa(i, j);
      Vec4 d = dq_[pidx(i, j)];
      if (use_f) d += (dt / (k * grid_.dxc())) * (F_[fidx(i + 1, j)] - F_[fidx(i, j)]);
      if (use_g) d += (dt / (k * grid_.dyc())) * (G_[pidx(i, j + 1)] - G_[pidx(i, j)]);
      ConsState& q = cons(i, j);
      q = ConsState::from_vec(q.vec() - d);
    }
}

bool Solver2D::try_hyperbolic(double dt, bool edges_fresh, double& rate_used) {
  const int mx = grid_.mx(), my = grid_.my();
  auto clear = [this] {
    std::fill(dq_.begin(), dq_.end(), Vec4{});
    std::fill(F_.begin(), F_.end(), Vec4{});
    std::fill(G_.begin(), G_.end(), Vec4{});
  };
  if (num_.transverse) {
    if (!edges_fresh) {
      apply_boundaries();
      prepare_cells();
      rate_used = std::max(solve_x_edges(-1, my), solve_y_edges(-1, mx));
    }
    last_cfl_ = dt * rate_used;
    if (last_cfl_ > 1.0 + 1e-12) return false;
    clear();
    accumulate_x(dt, true);
    accumulate_y(dt, true);
    apply_increments(dt, true, true);
    return true;
  }

  // Dimensional splitting: x then y, each with its own boundary fill.
  const std::vector<ConsState> saved = q_;
  if (!edges_fresh) {
    apply_boundaries();
    prepare_cells();
    rate_used = solve_x_edges(0, my - 1);
  }
  last_cfl_ = dt * rate_used;
  if (last_cfl_ > 1.0 + 1e-12) return false;
  clear();
  accumulate_x(dt, false);
  apply_increments(dt, true, false);
  apply_boundaries();
  prepare_cells();
  const double ry = solve_y_edges(0, mx - 1);
  if (dt * ry > 1.0 + 1e-12) {
    q_ = saved;
    rate_used = std::max(rate_used, ry);
    return false;
  }
  last_cfl_ = std::max(last_cfl_, dt * ry);
  clear();
  accumulate_y(dt, false);
  apply_increments(dt, false, true);
  return true;
}

double Solver2D::cfl_rate() {
  apply_boundaries();
  prepare_cells();
  if (num_.transverse) return std::max(solve_x_edges(-1, grid_.my()), solve_y_edges(-1, grid_.mx()));
  return std::max(solve_x_edges(0, grid_.my() - 1), solve_y_edges(0, grid_.mx() - 1));
}

double Solver2D::cfl_dt(double cfl) {
  const double r = cfl_rate();
  return r > 0.0 ? cfl / r : std::numeric_limits<double>::infinity();
}

void Solver2D::hyperbolic_step(double dt) {
  double rate = 0.0;
  if (!try_hyperbolic(dt, false, rate)) {
    std::ostringstream msg;
    msg << "time step " << dt << " violates CFL (" << dt * rate << ")";
    throw NumericalError(msg.str());
  }
}

void Solver2D::source_step(double dt) {
  if (!num_.axisymmetric || dt == 0.0) return;
  for (int j = 0; j < grid_.my(); ++j)
    for (int i = 0; i < grid_.mx(); ++i)
      cons(i, j) = axisymmetric_source_step(cons(i, j), eos_of(i, j), grid_.centroid_y(i, j), dt);
}

void Solver2D::check_cells() const {
  for (int j = 0; j < grid_.my(); ++j)
    for (int i = 0; i < grid_.mx(); ++i) {
      const PrimState w = cons_to_prim_unchecked(cons(i, j), eos_of(i, j));
      if (!is_admissible(w, eos_of(i, j))) {
        std::ostringstream msg;
        msg << "cell (" << i << "," << j << ") at (" << grid_.centroid_x(i, j) << ", "
            << grid_.centroid_y(i, j) << ") became inadmissible (rho=" << w.rho << ", p=" << w.p
            << ")";
        throw StepFailure(msg.str(), time_, i, j);
      }
    }
}

void Solver2D::step(double dt) {
  const bool strang = num_.source_splitting == SourceSplitting::strang;
  if (strang) source_step(0.5 * dt);
  hyperbolic_step(dt);
  source_step(strang ? 0.5 * dt : dt);
  time_ += dt;
  check_cells();
}

double Solver2D::advance(double t_end) {
  const double remaining = t_end - time_;
  if (!(remaining > 0.0)) return 0.0;
  const bool strang = num_.axisymmetric && num_.source_splitting == SourceSplitting::strang;
  double rate = cfl_rate();
  double dt = rate > 0.0 ? std::min(remaining, num_.cfl / rate) : remaining;
  const std::vector<ConsState> saved = q_;
  for (int attempt = 0; attempt < 8; ++attempt) {
    bool fresh = true;
    if (strang) {
      source_step(0.5 * dt);
      fresh = false;
    }
    if (try_hyperbolic(dt, fresh, rate)) {
      source_step(strang ? 0.5 * dt : dt);
      time_ = dt == remaining ? t_end : time_ + dt;
      check_cells();
      return dt;
    }
    q_ = saved;
    dt = std::min(remaining, num_.cfl / rate);
  }
  throw StepFailure("could not find a stable time step", time_, -1, -1);
}

int Solver2D::run(double t_end, const std::function<void(const Solver2D&)>& on_step) {
  int steps = 0;
  if (!gauges_.empty() && (gauges_.front().t.empty() || gauges_.front().t.back() < time_))
    record_gauges();
  while (time_ < t_end) {
    if (advance(t_end) == 0.0) break;
    ++steps;
    record_gauges();
    if (on_step) on_step(*this);
  }
  return steps;
}

Gauge& Solver2D::add_gauge(const std::string& id, double x, double y) {
  Gauge gauge;
  gauge.id = id;
  gauge.x = x;
  gauge.y = y;
  const auto cell = grid_.locate(x, y);
  gauge.cell_i = cell[0];
  gauge.cell_j = cell[1];
  gauges_.push_back(gauge);
  return gauges_.back();
}

void Solver2D::record_gauges() {
  for (Gauge& g : gauges_) {
    g.t.push_back(time_);
    g.p_kpa.push_back(prim(g.cell_i, g.cell_j).p / 1000.0);
  }
}

Vec4 Solver2D::totals() const {
  Vec4 t{};
  for (int j = 0; j < grid_.my(); ++j)
    for (int i = 0; i < grid_.mx(); ++i) t += grid_.area(i, j) * cons(i, j).vec();
  return t;
}

std::vector<double> Solver2D::pressure_gradient_magnitude() {
  apply_boundaries();
  prepare_cells();
  const int mx = grid_.mx(), my = grid_.my();
  std::vector<double> out(mx * my);
  for (int j = 0; j < my; ++j)
    for (int i = 0; i < mx; ++i) {
      const double pc = w_[pidx(i, j)].p;
      double gx = 0.0, gy = 0.0;
      auto add = [&](std::array<double, 2> n, double len, double sign, double pn) {
        const double pf = 0.5 * (pc + pn);
        gx += sign * pf * n[0] * len;
        gy += sign * pf * n[1] * len;
      };
      add(grid_.x_normal(i + 1, j), grid_.x_gamma(i + 1, j) * grid_.dyc(), 1.0,
          w_[pidx(i + 1, j)].p);
      add(grid_.x_normal(i, j), grid_.x_gamma(i, j) * grid_.dyc(), -1.0, w_[pidx(i - 1, j)].p);
      add(grid_.y_normal(i, j + 1), grid_.y_gamma(i, j + 1) * grid_.dxc(), 1.0,
          w_[pidx(i, j + 1)].p);
      add(grid_.y_normal(i, j), grid_.y_gamma(i, j) * grid_.dxc(), -1.0, w_[pidx(i, j - 1)].p);
      out[j * mx + i] = std::hypot(gx, gy) / grid_.area(i, j);
    }
  return out;
}

void Solver2D::write_snapshot(const std::string& path) const {
  {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open '" + path + "' for writing");
    os << "# nx " << grid_.mx() << " ny " << grid_.my() << " time " << fmt_double(time_)
       << " mapping " << grid_.mapping().name() << "\n";
  }
  std::ofstream os(path, std::ios::app);
  os << "z_m,r_m,rho,u_r,u_z,p_kPa,material\n";
  for (int j = 0; j < grid_.my(); ++j)
    for (int i = 0; i < grid_.mx(); ++i) {
      const PrimState w = prim(i, j);
      os << fmt_double(grid_.centroid_x(i, j)) << ',' << fmt_double(grid_.centroid_y(i, j)) << ','
         << fmt_double(w.rho) << ',' << fmt_double(w.v) << ',' << fmt_double(w.u) << ','
         << fmt_double(w.p / 1000.0) << ',' << mats_.names[material(i, j)] << '\n';
    }
}

void Solver2D::write_schlieren(const std::string& path) {
  const auto grad = pressure_gradient_magnitude();
  CsvWriter csv(path, {"z_m", "r_m", "grad_p_Pa_per_m"});
  for (int j = 0; j < grid_.my(); ++j)
    for (int i = 0; i < grid_.mx(); ++i) {
      csv << grid_.centroid_x(i, j) << grid_.centroid_y(i, j) << grad[j * grid_.mx() + i];
      csv.end_row();
    }
}

} // namespace tammann
