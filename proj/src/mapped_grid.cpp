#include "tammann/mapped_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "tammann/error.hpp"
#include "tammann/output.hpp"

namespace tammann {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

bool on_grid_line(double v, double lo, double h) {
  const double pos = (v - lo) / h;
  return std::abs(pos - std::round(pos)) <= 1e-9;
}

} // namespace

void CircularInclusionMap::validate() const {
  if (!(r_i > 0.0 && r_o > r_i && r_m > r_o))
    throw ConfigError("circular inclusion map requires 0 < r_i < r_o < r_m");
}

double CircularInclusionMap::D(double d) const {
  const double a = r_o / r_m;
  if (d <= a) return r_m * d / kSqrt2;
  return r_o / kSqrt2 + (d - a) * (r_m - r_o / kSqrt2) / (1.0 - a);
}

double CircularInclusionMap::R(double d) const {
  const double b1 = r_i / r_m;
  const double b2 = r_o / r_m;
  if (d <= b1) return r_i;
  if (d <= b2) return d * r_m;
  if (d >= 1.0) return std::numeric_limits<double>::infinity();
  const double prefactor = branch == OuterBranch::printed ? r_m : r_o;
  return prefactor * std::pow((1.0 - b2) / (1.0 - d), r_m / r_o + 0.5);
}

std::array<double, 2> CircularInclusionMap::operator()(double xc, double yc) const {
  const double ax = std::abs(xc);
  const double ay = std::abs(yc);
  const double d = std::max(ax, ay);
  if (d == 0.0) return {0.0, 0.0};

  // Work in the eastern sector: a is the dominant coordinate (= d), b the other.
  const bool east_west = ax >= ay;
  const double b = east_west ? yc : xc;
  const double dd = D(d);
  const double rr = R(d);
  const double yp = b * dd / d;
  double xp = dd;
  if (std::isfinite(rr)) {
    // x0 + sqrt(R^2 - yp^2) rewritten to avoid cancellation for large R.
    const double s1 = std::sqrt(std::max(0.0, rr * rr - yp * yp));
    const double s2 = std::sqrt(std::max(0.0, rr * rr - dd * dd));
    xp = dd + (dd * dd - yp * yp) / (s1 + s2);
  }
  if (east_west) return {std::copysign(xp, xc), yp};
  return {yp, std::copysign(xp, yc)};
}

double outer_ring_jump(const CircularInclusionMap& map) {
  const double d0 = map.r_o / map.r_m;
  const double eps = 1e-10;
  const auto inner = map(d0 - eps, 0.0);
  const auto outer = map(d0 + eps, 0.0);
  return std::abs(outer[0] - inner[0]) / map.r_o;
}

OuterBranch resolve_branch(const CircularInclusionMap& map) {
  if (map.branch != OuterBranch::automatic) return map.branch;
  CircularInclusionMap printed = map;
  printed.branch = OuterBranch::printed;
  return outer_ring_jump(printed) < 1e-6 ? OuterBranch::printed : OuterBranch::continuous;
}

std::string to_string(OuterBranch b) {
  switch (b) {
    case OuterBranch::printed: return "printed";
    case OuterBranch::continuous: return "continuous";
    case OuterBranch::automatic: return "auto";
  }
  return "auto";
}

OuterBranch parse_outer_branch(const std::string& s) {
  if (s == "printed") return OuterBranch::printed;
  if (s == "continuous") return OuterBranch::continuous;
  if (s == "auto" || s == "automatic") return OuterBranch::automatic;
  throw ConfigError("unknown outer-branch variant '" + s + "'");
}

std::array<double, 2> Mapping::operator()(double xc, double yc) const {
  switch (kind) {
    case MappingKind::identity: return {xc, yc};
    case MappingKind::scaled: return {scale * xc, scale * yc};
    case MappingKind::circular_inclusion: return circle(xc, yc);
  }
  return {xc, yc};
}

std::string Mapping::name() const {
  switch (kind) {
    case MappingKind::identity: return "identity";
    case MappingKind::scaled: return "scaled";
    case MappingKind::circular_inclusion: return "circular_inclusion";
  }
  return "identity";
}

MappedGrid2D::MappedGrid2D(int mx, int my, double xc_lo, double xc_hi, double yc_lo,
                           double yc_hi, const Mapping& mapping)
    : mx_(mx), my_(my), xc_lo_(xc_lo), xc_hi_(xc_hi), yc_lo_(yc_lo), yc_hi_(yc_hi),
      mapping_(mapping) {
  if (mx < 1 || my < 1) throw ConfigError("mapped grid needs mx, my >= 1");
  if (!(xc_hi > xc_lo && yc_hi > yc_lo)) throw ConfigError("empty computational domain");
  if (mapping_.kind == MappingKind::circular_inclusion) {
    mapping_.circle.validate();
    mapping_.circle.branch = resolve_branch(mapping_.circle);
    if (xc_lo < -1.0 || xc_hi > 1.0 || yc_lo < -1.0 || yc_hi > 1.0)
      throw ConfigError("circular inclusion map needs a computational domain inside [-1,1]^2");
  }
  if (mapping_.kind == MappingKind::scaled && !(mapping_.scale > 0.0))
    throw ConfigError("scaled mapping needs a positive factor");
  dxc_ = (xc_hi - xc_lo) / mx;
  dyc_ = (yc_hi - yc_lo) / my;

  nx_.resize((mx + 1) * (my + 1));
  ny_.resize(nx_.size());
  for (int j = 0; j <= my; ++j)
    for (int i = 0; i <= mx; ++i) {
      const double xc = i == mx ? xc_hi : xc_lo + i * dxc_;
      const double yc = j == my ? yc_hi : yc_lo + j * dyc_;
      const auto p = mapping_(xc, yc);
      nx_[nidx(i, j)] = p[0];
      ny_[nidx(i, j)] = p[1];
    }
  material_.assign(mx * my, 0);
  compute_metrics();
}

int MappedGrid2D::cidx(int i, int j) const {
  i = std::clamp(i, 0, mx_ - 1);
  j = std::clamp(j, 0, my_ - 1);
  return j * mx_ + i;
}

std::array<double, 2> MappedGrid2D::node(int i, int j) const {
  return {nx_[nidx(i, j)], ny_[nidx(i, j)]};
}

std::array<double, 2> MappedGrid2D::x_normal(int i, int j) const {
  const int k = std::clamp(j, 0, my_ - 1) * (mx_ + 1) + std::clamp(i, 0, mx_);
  return {xe_nx_[k], xe_ny_[k]};
}

double MappedGrid2D::x_gamma(int i, int j) const {
  return xe_g_[std::clamp(j, 0, my_ - 1) * (mx_ + 1) + std::clamp(i, 0, mx_)];
}

std::array<double, 2> MappedGrid2D::y_normal(int i, int j) const {
  const int k = std::clamp(j, 0, my_) * mx_ + std::clamp(i, 0, mx_ - 1);
  return {ye_nx_[k], ye_ny_[k]};
}

double MappedGrid2D::y_gamma(int i, int j) const {
  return ye_g_[std::clamp(j, 0, my_) * mx_ + std::clamp(i, 0, mx_ - 1)];
}

void MappedGrid2D::compute_metrics() {
  xe_nx_.resize((mx_ + 1) * my_);
  xe_ny_.resize(xe_nx_.size());
  xe_g_.resize(xe_nx_.size());
  for (int j = 0; j < my_; ++j)
    for (int i = 0; i <= mx_; ++i) {
      const double tx = nx_[nidx(i, j + 1)] - nx_[nidx(i, j)];
      const double ty = ny_[nidx(i, j + 1)] - ny_[nidx(i, j)];
      const double len = std::hypot(tx, ty);
      if (!(len > 0.0)) {
        std::ostringstream msg;
        msg << "degenerate x-edge at (" << i << "," << j << ")";
        throw GridError(msg.str());
      }
      const int k = j * (mx_ + 1) + i;
      xe_nx_[k] = ty / len;
      xe_ny_[k] = -tx / len;
      xe_g_[k] = len / dyc_;
    }

  ye_nx_.resize(mx_ * (my_ + 1));
  ye_ny_.resize(ye_nx_.size());
  ye_g_.resize(ye_nx_.size());
  for (int j = 0; j <= my_; ++j)
    for (int i = 0; i < mx_; ++i) {
      const double tx = nx_[nidx(i + 1, j)] - nx_[nidx(i, j)];
      const double ty = ny_[nidx(i + 1, j)] - ny_[nidx(i, j)];
      const double len = std::hypot(tx, ty);
      if (!(len > 0.0)) {
        std::ostringstream msg;
        msg << "degenerate y-edge at (" << i << "," << j << ")";
        throw GridError(msg.str());
      }
      const int k = j * mx_ + i;
      ye_nx_[k] = -ty / len;
      ye_ny_[k] = tx / len;
      ye_g_[k] = len / dxc_;
    }

  kappa_.resize(mx_ * my_);
  cx_.resize(kappa_.size());
  cy_.resize(kappa_.size());
  min_kappa_ = std::numeric_limits<double>::infinity();
  for (int j = 0; j < my_; ++j)
    for (int i = 0; i < mx_; ++i) {
      const int ids[4] = {nidx(i, j), nidx(i + 1, j), nidx(i + 1, j + 1), nidx(i, j + 1)};
      double a2 = 0.0, sx = 0.0, sy = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double x0 = nx_[ids[k]], y0 = ny_[ids[k]];
        const double x1 = nx_[ids[(k + 1) % 4]], y1 = ny_[ids[(k + 1) % 4]];
        const double cr = x0 * y1 - x1 * y0;
        a2 += cr;
        sx += (x0 + x1) * cr;
        sy += (y0 + y1) * cr;
      }
      const double area = 0.5 * a2;
      if (!(area > 0.0)) {
        std::ostringstream msg;
        msg << "non-positive cell area at (" << i << "," << j << ")";
        throw GridError(msg.str());
      }
      const int c = j * mx_ + i;
      kappa_[c] = area / (dxc_ * dyc_);
      cx_[c] = sx / (3.0 * a2);
      cy_[c] = sy / (3.0 * a2);
      min_kappa_ = std::min(min_kappa_, kappa_[c]);
    }
}

void MappedGrid2D::fill_material(int m) { material_.assign(mx_ * my_, m); }

void MappedGrid2D::assign_rectangle(double xc0, double xc1, double yc0, double yc1, int m) {
  auto check = [](double v, double lo, double hi, double h, const char* what) {
    if (v > lo && v < hi && !on_grid_line(v, lo, h))
      throw ConfigError(std::string("region boundary ") + what + " is not on a grid line");
  };
  check(xc0, xc_lo_, xc_hi_, dxc_, "x0");
  check(xc1, xc_lo_, xc_hi_, dxc_, "x1");
  check(yc0, yc_lo_, yc_hi_, dyc_, "y0");
  check(yc1, yc_lo_, yc_hi_, dyc_, "y1");
  for (int j = 0; j < my_; ++j)
    for (int i = 0; i < mx_; ++i) {
      const double xc = xc_lo_ + (i + 0.5) * dxc_;
      const double yc = yc_lo_ + (j + 0.5) * dyc_;
      if (xc > xc0 && xc < xc1 && yc > yc0 && yc < yc1) material_[j * mx_ + i] = m;
    }
}

void MappedGrid2D::assign_ring_interior(double d_max, int m) {
  for (double v : {d_max, -d_max}) {
    if (v > xc_lo_ && v < xc_hi_ && !on_grid_line(v, xc_lo_, dxc_))
      throw ConfigError("ring boundary is not on an x grid line");
    if (v > yc_lo_ && v < yc_hi_ && !on_grid_line(v, yc_lo_, dyc_))
      throw ConfigError("ring boundary is not on a y grid line");
  }
  for (int j = 0; j < my_; ++j)
    for (int i = 0; i < mx_; ++i) {
      const double xc = xc_lo_ + (i + 0.5) * dxc_;
      const double yc = yc_lo_ + (j + 0.5) * dyc_;
      if (std::max(std::abs(xc), std::abs(yc)) < d_max) material_[j * mx_ + i] = m;
    }
}

std::array<int, 2> MappedGrid2D::interface_edge_counts() const {
  int nxe = 0, nye = 0;
  for (int j = 0; j < my_; ++j)
    for (int i = 1; i < mx_; ++i)
      if (material_[j * mx_ + i] != material_[j * mx_ + i - 1]) ++nxe;
  for (int j = 1; j < my_; ++j)
    for (int i = 0; i < mx_; ++i)
      if (material_[j * mx_ + i] != material_[(j - 1) * mx_ + i]) ++nye;
  return {nxe, nye};
}

std::array<int, 2> MappedGrid2D::locate(double x, double y) const {
  for (int j = 0; j < my_; ++j)
    for (int i = 0; i < mx_; ++i) {
      const int ids[4] = {nidx(i, j), nidx(i + 1, j), nidx(i + 1, j + 1), nidx(i, j + 1)};
      bool inside = true;
      for (int k = 0; k < 4 && inside; ++k) {
        const double ax = nx_[ids[k]], ay = ny_[ids[k]];
        const double bx = nx_[ids[(k + 1) % 4]], by = ny_[ids[(k + 1) % 4]];
        const double ex = bx - ax, ey = by - ay;
        const double cr = ex * (y - ay) - ey * (x - ax);
        if (cr < -1e-12 * (ex * ex + ey * ey)) inside = false;
      }
      if (inside) return {i, j};
    }
  std::ostringstream msg;
  msg << "point (" << x << ", " << y << ") lies outside the grid";
  throw ConfigError(msg.str());
}

double MappedGrid2D::max_closure_defect() const {
  double worst = 0.0;
  for (int j = 0; j < my_; ++j)
    for (int i = 0; i < mx_; ++i) {
      double sx = 0.0, sy = 0.0, perim = 0.0;
      auto add = [&](std::array<double, 2> n, double len, double sign) {
        sx += sign * n[0] * len;
        sy += sign * n[1] * len;
        perim += len;
      };
      add(x_normal(i + 1, j), x_gamma(i + 1, j) * dyc_, 1.0);
      add(x_normal(i, j), x_gamma(i, j) * dyc_, -1.0);
      add(y_normal(i, j + 1), y_gamma(i, j + 1) * dxc_, 1.0);
      add(y_normal(i, j), y_gamma(i, j) * dxc_, -1.0);
      worst = std::max(worst, std::hypot(sx, sy) / perim);
    }
  return worst;
}

void MappedGrid2D::dump(std::ostream& os, const std::string& variant) const {
  os << "# tammann mapped grid\n";
  os << "mx " << mx_ << "\n";
  os << "my " << my_ << "\n";
  os << "computational " << fmt_double(xc_lo_) << ' ' << fmt_double(xc_hi_) << ' '
     << fmt_double(yc_lo_) << ' ' << fmt_double(yc_hi_) << "\n";
  os << "mapping " << mapping_.name() << "\n";
  os << "variant " << variant << "\n";
  os << "min_kappa " << fmt_double(min_kappa_) << "\n";
  os << "nodes " << (mx_ + 1) * (my_ + 1) << "\n";
  for (int j = 0; j <= my_; ++j)
    for (int i = 0; i <= mx_; ++i)
      os << i << ' ' << j << ' ' << fmt_double(nx_[nidx(i, j)]) << ' '
         << fmt_double(ny_[nidx(i, j)]) << "\n";
  os << "cells " << mx_ * my_ << "\n";
  for (int j = 0; j < my_; ++j)
    for (int i = 0; i < mx_; ++i) {
      const int c = j * mx_ + i;
      os << i << ' ' << j << ' ' << fmt_double(kappa_[c]) << ' ' << material_[c] << "\n";
    }
}

} // namespace tammann
