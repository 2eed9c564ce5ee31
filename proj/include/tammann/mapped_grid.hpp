#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace tammann {

/// Which outer-branch radius formula the circular-inclusion map uses.
/// `printed` keeps the r_m prefactor, `continuous` uses r_o so that R is
/// continuous at d = r_o/r_m, `automatic` picks by a continuity self-test.
enum class OuterBranch { printed, continuous, automatic };

/// Circular-inclusion map of the square [-1,1]^2 onto [-r_m,r_m]^2 with
/// grid-line circles at radii r_i and r_o.
struct CircularInclusionMap {
  double r_i = 0.01;
  double r_o = 0.015;
  double r_m = 0.04;
  OuterBranch branch = OuterBranch::continuous;

  void validate() const;

  /// Half-diagonal D(d) and arc radius R(d) for d in (0, 1]. R may be +inf.
  double D(double d) const;
  double R(double d) const;

  std::array<double, 2> operator()(double xc, double yc) const;
};

/// Physical radial jump of the y_c = 0 grid line across d = r_o/r_m,
/// relative to r_o. Zero (to rounding) when the map is continuous there.
double outer_ring_jump(const CircularInclusionMap& map);

/// Resolves `automatic` to a concrete branch: printed if it passes the
/// continuity self-test, continuous otherwise.
OuterBranch resolve_branch(const CircularInclusionMap& map);

std::string to_string(OuterBranch b);
OuterBranch parse_outer_branch(const std::string& s);

enum class MappingKind { identity, scaled, circular_inclusion };

struct Mapping {
  MappingKind kind = MappingKind::identity;
  double scale = 1.0;
  CircularInclusionMap circle;

  std::array<double, 2> operator()(double xc, double yc) const;
  std::string name() const;
};

/// Logically rectangular grid with metrics for the wave-propagation update.
///
/// x-edge (i, j) is the left edge of cell (i, j), i = 0..mx; y-edge (i, j) is
/// the bottom edge, j = 0..my. Accessors accept ghost indices and clamp them
/// to the nearest interior metric.
class MappedGrid2D {
public:
  MappedGrid2D(int mx, int my, double xc_lo, double xc_hi, double yc_lo, double yc_hi,
               const Mapping& mapping);

  int mx() const { return mx_; }
  int my() const { return my_; }
  int ghosts() const { return 2; }
  double dxc() const { return dxc_; }
  double dyc() const { return dyc_; }
  double xc_lo() const { return xc_lo_; }
  double xc_hi() const { return xc_hi_; }
  double yc_lo() const { return yc_lo_; }
  double yc_hi() const { return yc_hi_; }
  const Mapping& mapping() const { return mapping_; }

  std::array<double, 2> node(int i, int j) const;

  double kappa(int i, int j) const { return kappa_[cidx(i, j)]; }
  double centroid_x(int i, int j) const { return cx_[cidx(i, j)]; }
  double centroid_y(int i, int j) const { return cy_[cidx(i, j)]; }
  double area(int i, int j) const { return kappa(i, j) * dxc_ * dyc_; }

  std::array<double, 2> x_normal(int i, int j) const;
  double x_gamma(int i, int j) const;
  std::array<double, 2> y_normal(int i, int j) const;
  double y_gamma(int i, int j) const;

  double min_kappa() const { return min_kappa_; }

  int material(int i, int j) const { return material_[cidx(i, j)]; }
  const std::vector<int>& materials() const { return material_; }
  void set_material(int i, int j, int m) { material_[(j)*mx_ + i] = m; }
  void fill_material(int m);

  /// Cells whose centroid lies in the computational rectangle get material m.
  /// Rectangle sides must coincide with grid lines (1e-9 cell tolerance).
  void assign_rectangle(double xc0, double xc1, double yc0, double yc1, int m);

  /// Cells with computational d = max(|xc|,|yc|) below d_max get material m.
  /// d_max must fall on grid lines in both directions.
  void assign_ring_interior(double d_max, int m);

  /// Number of x- and y-edges separating different materials (interior only).
  std::array<int, 2> interface_edge_counts() const;

  /// Cell whose quadrilateral contains (x, y); ties go to the lowest linear
  /// index j*mx+i. Throws ConfigError when no cell contains the point.
  std::array<int, 2> locate(double x, double y) const;

  /// Sum of signed normal*length around each cell; returns the max norm.
  double max_closure_defect() const;

  /// Plain-text dump: header lines, node records, cell records.
  void dump(std::ostream& os, const std::string& variant) const;

private:
  int cidx(int i, int j) const;
  int nidx(int i, int j) const { return j * (mx_ + 1) + i; }
  void compute_metrics();

  int mx_, my_;
  double xc_lo_, xc_hi_, yc_lo_, yc_hi_, dxc_, dyc_;
  Mapping mapping_;
  std::vector<double> nx_, ny_;  // node coordinates
  std::vector<double> xe_nx_, xe_ny_, xe_g_;
  std::vector<double> ye_nx_, ye_ny_, ye_g_;
  std::vector<double> kappa_, cx_, cy_;
  std::vector<int> material_;
  double min_kappa_ = 0.0;
};

} // namespace tammann
