#include "tammann/limiters.hpp"

#include <algorithm>
#include <cmath>

#include "tammann/error.hpp"

namespace tammann {

double flux_limiter(double theta, const LimiterSpec& spec) {
  switch (spec.kind) {
    case LimiterKind::none:
      return 1.0;
    case LimiterKind::minmod:
      return std::max(0.0, std::min(1.0, theta));
    case LimiterKind::modified_minmod:
      return std::max(0.0, std::min(1.0, spec.scale * theta));
    case LimiterKind::mc:
      return std::max(0.0, std::min({0.5 * (1.0 + theta), 2.0, 2.0 * theta}));
    case LimiterKind::vanleer:
      return (theta + std::abs(theta)) / (1.0 + std::abs(theta));
  }
  return 1.0;
}

double theta_standard(const Vec4& here, const Vec4& upwind) {
  const double den = dot(here, here);
  if (den == 0.0) return 0.0;
  return dot(upwind, here) / den;
}

double theta_transmission(double alpha_upwind, double alpha_here, double c_minus, double c_plus,
                          WaveFamily family) {
  if (alpha_here == 0.0) return 0.0;
  const double ratio = alpha_upwind / alpha_here;
  switch (family) {
    case WaveFamily::left_acoustic:
      return ratio * 2.0 * c_plus / (c_minus + c_plus);
    case WaveFamily::right_acoustic:
      return ratio * 2.0 * c_minus / (c_minus + c_plus);
    case WaveFamily::contact:
      break;
  }
  return 0.0;
}

std::array<double, 2> acoustic_alphas(double d_rho, double d_mn, double c_left, double c_right) {
  const double s = c_left + c_right;
  return {(c_right * d_rho - d_mn) / s, (c_left * d_rho + d_mn) / s};
}

std::array<Vec4, 3> limit_waves(const std::array<Vec4, 3>& waves,
                                const std::array<double, 3>& thetas, const LimiterSpec& spec) {
  std::array<Vec4, 3> out;
  for (int p = 0; p < 3; ++p) out[p] = flux_limiter(thetas[p], spec) * waves[p];
  return out;
}

LimiterKind parse_limiter_kind(const std::string& name) {
  if (name == "none") return LimiterKind::none;
  if (name == "minmod") return LimiterKind::minmod;
  if (name == "modified_minmod") return LimiterKind::modified_minmod;
  if (name == "mc") return LimiterKind::mc;
  if (name == "vanleer") return LimiterKind::vanleer;
  throw ConfigError("unknown limiter '" + name + "'");
}

std::string to_string(LimiterKind kind) {
  switch (kind) {
    case LimiterKind::none: return "none";
    case LimiterKind::minmod: return "minmod";
    case LimiterKind::modified_minmod: return "modified_minmod";
    case LimiterKind::mc: return "mc";
    case LimiterKind::vanleer: return "vanleer";
  }
  return "none";
}

ThetaPolicy parse_theta_policy(const std::string& name) {
  if (name == "standard_projection" || name == "standard") return ThetaPolicy::standard_projection;
  if (name == "transmission_based" || name == "transmission") return ThetaPolicy::transmission_based;
  throw ConfigError("unknown theta policy '" + name + "'");
}

std::string to_string(ThetaPolicy policy) {
  return policy == ThetaPolicy::standard_projection ? "standard_projection" : "transmission_based";
}

} // namespace tammann
