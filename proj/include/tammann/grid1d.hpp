#pragma once

#include <vector>

namespace tammann {

/// Uniform 1D grid with ghost cells and an edge-aligned material layout.
/// Interior cells are 0..n-1; edge e sits between cells e-1 and e.
class Grid1D {
public:
  Grid1D(double x_lo, double x_hi, int n_cells, int ghost_width = 2);

  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  int size() const { return n_; }
  int ghosts() const { return ghosts_; }
  double dx() const { return dx_; }
  double center(int i) const { return x_lo_ + (i + 0.5) * dx_; }
  double edge(int e) const { return x_lo_ + e * dx_; }

  /// Material layout from sorted interface positions and one material index
  /// per region (regions = interfaces + 1). Positions must lie on cell edges
  /// within 1e-9 dx; otherwise ConfigError.
  void set_layout(const std::vector<double>& interfaces, const std::vector<int>& materials);
  void fill_material(int material);

  int material(int i) const { return material_[i]; }
  const std::vector<int>& materials() const { return material_; }
  const std::vector<double>& interfaces() const { return interfaces_; }

  /// Edge indices (0..n) with different materials on their two sides.
  std::vector<int> interface_edges() const;

  /// Cell containing x; a point on an interior edge belongs to the lower
  /// index. Throws ConfigError outside [x_lo, x_hi].
  int locate(double x) const;

private:
  double x_lo_, x_hi_;
  int n_;
  int ghosts_;
  double dx_;
  std::vector<int> material_;
  std::vector<double> interfaces_;
};

} // namespace tammann
