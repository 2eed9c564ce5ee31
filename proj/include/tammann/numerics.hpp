#pragma once

#include <array>
#include <string>
#include <vector>

#include "tammann/eos.hpp"
#include "tammann/fluctuations.hpp"
#include "tammann/limiters.hpp"
#include "tammann/riemann_hllc.hpp"

namespace tammann {

enum class InteriorSolver { hllc, exact };
enum class InterfaceSolver { exact_lagrangian, hllc_lagrangian };
enum class BoundaryKind { outflow, wall, periodic };
enum class SourceSplitting { strang, godunov };
/// Energy row of the acoustic transverse fluctuations.
enum class TransverseEnergy { zero, enthalpy };

/// Solver switches shared by the 1D and 2D integrators.
struct Numerics {
  InteriorSolver interior = InteriorSolver::hllc;
  InterfaceSolver interface = InterfaceSolver::exact_lagrangian;
  SpeedEstimate speeds = SpeedEstimate::davis;
  LimiterSpec bulk_limiter{LimiterKind::minmod, 1.0 / 3.0};
  LimiterSpec stiff_limiter{LimiterKind::modified_minmod, 1.0 / 3.0};
  ThetaPolicy theta_policy = ThetaPolicy::transmission_based;
  bool high_order = true;
  double cfl = 0.9;
  // 2D only.
  bool transverse = true;  // false selects dimensional splitting
  bool axisymmetric = true;
  SourceSplitting source_splitting = SourceSplitting::strang;
  TransverseEnergy transverse_energy = TransverseEnergy::enthalpy;
};

/// Materials present in a run, addressed by index. `stiff` marks materials
/// whose cells use the stiff limiter.
struct MaterialSet {
  std::vector<std::string> names;
  std::vector<TammannEos> eos;
  std::vector<char> stiff;

  int add(const std::string& name, const TammannEos& e, bool is_stiff);
  int index_of(const std::string& name) const;  // -1 if absent
  int size() const { return static_cast<int>(eos.size()); }
};

InteriorSolver parse_interior_solver(const std::string& s);
InterfaceSolver parse_interface_solver(const std::string& s);
SpeedEstimate parse_speed_estimate(const std::string& s);
BoundaryKind parse_boundary(const std::string& s);
SourceSplitting parse_source_splitting(const std::string& s);
TransverseEnergy parse_transverse_energy(const std::string& s);
std::string to_string(InteriorSolver s);
std::string to_string(InterfaceSolver s);
std::string to_string(SpeedEstimate s);
std::string to_string(BoundaryKind b);
std::string to_string(SourceSplitting s);
std::string to_string(TransverseEnergy e);

/// Riemann solve for one edge in the edge-normal frame. Interface edges use
/// the configured Lagrangian-shifted solver.
Fluctuations solve_edge(const PrimState& left, const PrimState& right, const TammannEos& eos_l,
                        const TammannEos& eos_r, bool interface, const Numerics& num);

/// Per-edge data needed to limit a line of edges.
struct EdgeInfo {
  bool interface = false;
  int mat_left = 0, mat_right = 0;
  double c_left = 0.0, c_right = 0.0;
  double nx = 1.0, ny = 0.0;  // edge normal, to recover normal momentum
};

/// Limited waves along a line of consecutive edges. Edge k uses edges k-1 and
/// k+1 as upwind neighbours, so the first and last entries are left zero.
std::vector<std::array<Vec4, 3>> limit_line(const std::vector<Fluctuations>& edges,
                                            const std::vector<EdgeInfo>& info,
                                            const MaterialSet& mats, const Numerics& num);

/// 0.5 * sum |s| (1 - dtdx |s|) W~.
Vec4 correction_flux(const Fluctuations& f, const std::array<Vec4, 3>& limited, double dtdx);

} // namespace tammann
