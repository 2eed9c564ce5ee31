#include "tammann/numerics.hpp"

#include <cmath>

#include "tammann/error.hpp"
#include "tammann/riemann_exact.hpp"

namespace tammann {

int MaterialSet::add(const std::string& name, const TammannEos& e, bool is_stiff) {
  const int existing = index_of(name);
  if (existing >= 0) return existing;
  e.validate();
  names.push_back(name);
  eos.push_back(e);
  stiff.push_back(is_stiff ? 1 : 0);
  return size() - 1;
}

int MaterialSet::index_of(const std::string& name) const {
  for (int k = 0; k < size(); ++k)
    if (names[k] == name) return k;
  return -1;
}

InteriorSolver parse_interior_solver(const std::string& s) {
  if (s == "hllc") return InteriorSolver::hllc;
  if (s == "exact") return InteriorSolver::exact;
  throw ConfigError("unknown interior solver '" + s + "'");
}

InterfaceSolver parse_interface_solver(const std::string& s) {
  if (s == "exact_lagrangian") return InterfaceSolver::exact_lagrangian;
  if (s == "hllc_lagrangian") return InterfaceSolver::hllc_lagrangian;
  throw ConfigError("unknown interface solver '" + s + "'");
}

SpeedEstimate parse_speed_estimate(const std::string& s) {
  if (s == "davis") return SpeedEstimate::davis;
  if (s == "roe") return SpeedEstimate::roe;
  throw ConfigError("unknown speed estimate '" + s + "'");
}

BoundaryKind parse_boundary(const std::string& s) {
  if (s == "outflow") return BoundaryKind::outflow;
  if (s == "wall") return BoundaryKind::wall;
  if (s == "periodic") return BoundaryKind::periodic;
  throw ConfigError("unknown boundary kind '" + s + "'");
}

SourceSplitting parse_source_splitting(const std::string& s) {
  if (s == "strang") return SourceSplitting::strang;
  if (s == "godunov") return SourceSplitting::godunov;
  throw ConfigError("unknown source splitting '" + s + "'");
}

TransverseEnergy parse_transverse_energy(const std::string& s) {
  if (s == "zero") return TransverseEnergy::zero;
  if (s == "enthalpy") return TransverseEnergy::enthalpy;
  throw ConfigError("unknown transverse energy row '" + s + "'");
}

std::string to_string(TransverseEnergy e) { return e == TransverseEnergy::zero ? "zero" : "enthalpy"; }

std::string to_string(InteriorSolver s) { return s == InteriorSolver::hllc ? "hllc" : "exact"; }
std::string to_string(InterfaceSolver s) {
  return s == InterfaceSolver::exact_lagrangian ? "exact_lagrangian" : "hllc_lagrangian";
}
std::string to_string(SpeedEstimate s) { return s == SpeedEstimate::davis ? "davis" : "roe"; }
std::string to_string(BoundaryKind b) {
  switch (b) {
    case BoundaryKind::outflow: return "outflow";
    case BoundaryKind::wall: return "wall";
    case BoundaryKind::periodic: return "periodic";
  }
  return "outflow";
}
std::string to_string(SourceSplitting s) { return s == SourceSplitting::strang ? "strang" : "godunov"; }

Fluctuations solve_edge(const PrimState& l, const PrimState& r, const TammannEos& el,
                        const TammannEos& er, bool interface, const Numerics& num) {
  if (interface) {
    if (num.interface == InterfaceSolver::exact_lagrangian)
      return exact_fluctuations(l, r, el, er, true);
    return hllc_fluctuations(l, r, el, er, true, num.speeds);
  }
  if (num.interior == InteriorSolver::exact) return exact_fluctuations(l, r, el, er, false);
  return hllc_fluctuations(l, r, el, er, false, num.speeds);
}

namespace {

std::array<double, 2> normal_alphas(const Vec4& w, const EdgeInfo& e) {
  const double dmn = e.nx * w[1] + e.ny * w[2];
  return acoustic_alphas(w[0], dmn, e.c_left, e.c_right);
}

} // namespace

std::vector<std::array<Vec4, 3>> limit_line(const std::vector<Fluctuations>& edges,
                                            const std::vector<EdgeInfo>& info,
                                            const MaterialSet& mats, const Numerics& num) {
  const std::size_t n = edges.size();
  std::vector<std::array<Vec4, 3>> out(n);
  if (!num.high_order) return out;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const Fluctuations& f = edges[k];
    const EdgeInfo& e = info[k];
    std::array<double, 3> theta{};
    std::array<Vec4, 3> limited{};
    for (int p = 0; p < 3; ++p) {
      const double s = f.speeds[p];
      if (e.interface && p == 1) {
        theta[p] = 0.0;
      } else if (e.interface && num.theta_policy == ThetaPolicy::transmission_based) {
        if (p == 0) {
          const double here = normal_alphas(f.waves[0], e)[0];
          const double up = normal_alphas(edges[k + 1].waves[0], info[k + 1])[0];
          theta[p] = theta_transmission(up, here, e.c_left, e.c_right, WaveFamily::left_acoustic);
        } else {
          const double here = normal_alphas(f.waves[2], e)[1];
          const double up = normal_alphas(edges[k - 1].waves[2], info[k - 1])[1];
          theta[p] = theta_transmission(up, here, e.c_left, e.c_right, WaveFamily::right_acoustic);
        }
      } else {
        const std::size_t up = s < 0.0 ? k + 1 : k - 1;
        theta[p] = theta_standard(f.waves[p], edges[up].waves[p]);
      }
      // A wave is limited with the rule of the material it travels into.
      int mat;
      if (p == 0)
        mat = e.mat_left;
      else if (p == 2)
        mat = e.mat_right;
      else
        mat = s < 0.0 ? e.mat_left : e.mat_right;
      const LimiterSpec& spec = mats.stiff[mat] ? num.stiff_limiter : num.bulk_limiter;
      limited[p] = flux_limiter(theta[p], spec) * f.waves[p];
    }
    out[k] = limited;
  }
  return out;
}

Vec4 correction_flux(const Fluctuations& f, const std::array<Vec4, 3>& limited, double dtdx) {
  Vec4 out{};
  for (int p = 0; p < 3; ++p) {
    const double a = std::abs(f.speeds[p]);
    out += (0.5 * a * (1.0 - dtdx * a)) * limited[p];
  }
  return out;
}

} // namespace tammann
