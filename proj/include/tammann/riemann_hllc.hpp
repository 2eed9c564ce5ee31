#pragma once

#include <utility>

#include "tammann/eos.hpp"
#include "tammann/fluctuations.hpp"
#include "tammann/state.hpp"

namespace tammann {

enum class SpeedEstimate { davis, roe };

struct HllcStar {
  double s_left = 0.0;
  double s_star = 0.0;
  double s_right = 0.0;
  double p_star = 0.0;
  ConsState q_star_left;
  ConsState q_star_right;
};

/// S_l = min(u_l - c_l, u_r - c_r), S_r = max(u_l + c_l, u_r + c_r).
std::pair<double, double> davis_speeds(const PrimState& left, const PrimState& right,
                                       const TammannEos& eos_l, const TammannEos& eos_r);

/// Einfeldt-type bounds built on the sqrt(rho)-weighted velocity and total
/// enthalpy averages. When the two closures differ, gamma is averaged with
/// the same weights. Falls back to Davis if the averaged sound speed is not
/// real.
std::pair<double, double> roe_average_speeds(const PrimState& left, const PrimState& right,
                                             const TammannEos& eos_l, const TammannEos& eos_r);

/// Contact speed and the two star states for the given outer speeds.
/// Throws DegenerateSpeedsError if the contact speed is undefined.
HllcStar hllc_star(const PrimState& left, const PrimState& right, const TammannEos& eos_l,
                   const TammannEos& eos_r, double s_left, double s_right);

Fluctuations hllc_fluctuations(const PrimState& left, const PrimState& right,
                               const TammannEos& eos_l, const TammannEos& eos_r,
                               bool lagrangian_shift, SpeedEstimate speeds = SpeedEstimate::davis);

} // namespace tammann
