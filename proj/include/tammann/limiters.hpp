#pragma once

#include <array>
#include <string>

#include "tammann/state.hpp"

namespace tammann {

enum class LimiterKind { none, minmod, modified_minmod, mc, vanleer };

// Flux-limiter function phi(theta). `scale` is only used by modified_minmod,
// phi = minmod(1, scale * theta), and must lie in (0, 1].
struct LimiterSpec {
  LimiterKind kind = LimiterKind::minmod;
  double scale = 1.0 / 3.0;
};

enum class ThetaPolicy { standard_projection, transmission_based };

enum class WaveFamily { left_acoustic = 1, contact = 2, right_acoustic = 3 };

double flux_limiter(double theta, const LimiterSpec& spec);

/// theta = (W_upwind . W_here) / (W_here . W_here); 0 when W_here vanishes.
double theta_standard(const Vec4& wave_here, const Vec4& wave_upwind);

/// Transmission-based smoothness ratio at a material interface between a
/// cell with sound speed c_minus (left) and c_plus (right). Family 1 compares
/// with the wave transmitted leftward out of the right cell, family 3 with the
/// wave transmitted rightward out of the left cell. Returns 0 when
/// alpha_here is 0.
double theta_transmission(double alpha_upwind, double alpha_here, double c_minus, double c_plus,
                          WaveFamily family);

/// Coefficients of (d_rho, d_mn) on the density/momentum acoustic
/// eigenvectors [1, -c_left] and [1, c_right] of an edge.
std::array<double, 2> acoustic_alphas(double d_rho, double d_mn, double c_left, double c_right);

/// W~_p = phi(theta_p) W_p.
std::array<Vec4, 3> limit_waves(const std::array<Vec4, 3>& waves,
                                const std::array<double, 3>& thetas, const LimiterSpec& spec);

LimiterKind parse_limiter_kind(const std::string& name);
std::string to_string(LimiterKind kind);
ThetaPolicy parse_theta_policy(const std::string& name);
std::string to_string(ThetaPolicy policy);

} // namespace tammann
