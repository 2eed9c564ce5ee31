#include "tammann/grid1d.hpp"

#include <cmath>
#include <sstream>

#include "tammann/error.hpp"

namespace tammann {

Grid1D::Grid1D(double x_lo, double x_hi, int n_cells, int ghost_width)
    : x_lo_(x_lo), x_hi_(x_hi), n_(n_cells), ghosts_(ghost_width) {
  if (!(x_hi > x_lo) || !std::isfinite(x_lo) || !std::isfinite(x_hi))
    throw ConfigError("grid requires x_lo < x_hi");
  if (n_cells < 1) throw ConfigError("grid requires at least one cell");
  if (ghost_width < 2) throw ConfigError("grid requires ghost width >= 2");
  dx_ = (x_hi - x_lo) / n_cells;
  material_.assign(n_, 0);
}

void Grid1D::fill_material(int material) {
  material_.assign(n_, material);
  interfaces_.clear();
}

void Grid1D::set_layout(const std::vector<double>& interfaces, const std::vector<int>& materials) {
  if (materials.size() != interfaces.size() + 1)
    throw ConfigError("layout needs one material per region");
  std::vector<int> edges;
  for (std::size_t k = 0; k < interfaces.size(); ++k) {
    const double x = interfaces[k];
    if (k > 0 && !(x > interfaces[k - 1])) throw ConfigError("interfaces must increase");
    const double pos = (x - x_lo_) / dx_;
    const double e = std::round(pos);
    if (std::abs(pos - e) > 1e-9 || e <= 0 || e >= n_) {
      std::ostringstream msg;
      msg << "interface at x=" << x << " is not on an interior cell edge (dx=" << dx_ << ")";
      throw ConfigError(msg.str());
    }
    edges.push_back(static_cast<int>(e));
  }
  std::size_t region = 0;
  for (int i = 0; i < n_; ++i) {
    while (region < edges.size() && i >= edges[region]) ++region;
    material_[i] = materials[region];
  }
  interfaces_ = interfaces;
}

std::vector<int> Grid1D::interface_edges() const {
  std::vector<int> out;
  for (int e = 1; e < n_; ++e)
    if (material_[e - 1] != material_[e]) out.push_back(e);
  return out;
}

int Grid1D::locate(double x) const {
  if (!(x >= x_lo_ && x <= x_hi_)) {
    std::ostringstream msg;
    msg << "point x=" << x << " lies outside the grid";
    throw ConfigError(msg.str());
  }
  const double pos = (x - x_lo_) / dx_;
  int i = static_cast<int>(std::floor(pos));
  // On an edge (within roundoff) the lower cell owns the point.
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) <= 1e-9) i = static_cast<int>(nearest) - 1;
  if (i >= n_) i = n_ - 1;
  if (i < 0) i = 0;
  return i;
}

} // namespace tammann
