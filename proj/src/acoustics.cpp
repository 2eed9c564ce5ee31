#include "tammann/acoustics.hpp"

#include <cmath>

#include "tammann/error.hpp"

namespace tammann {

namespace {
void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(what) + " must be positive");
}
} // namespace

AcousticMedium acoustic_medium(double rho, double p, const TammannEos& eos) {
  return {rho, sound_speed(PrimState{rho, 0.0, 0.0, p}, eos)};
}

std::pair<double, double> interface_coefficients(double z_a, double z_b) {
  require_positive(z_a, "impedance");
  if (std::isinf(z_b)) return {2.0, 1.0};
  require_positive(z_b, "impedance");
  const double s = z_a + z_b;
  return {2.0 * z_b / s, (z_b - z_a) / s};
}

double nth_transmission(double z_a, double z_p, double z_w, int n) {
  require_positive(z_a, "impedance");
  require_positive(z_p, "impedance");
  require_positive(z_w, "impedance");
  if (n < 1) throw ConfigError("transmission index must be >= 1");
  const double first = (2.0 * z_w / (z_w + z_p)) * (2.0 * z_p / (z_p + z_a));
  const double ratio = ((z_a - z_p) * (z_w - z_p)) / ((z_a + z_p) * (z_w + z_p));
  return first * std::pow(ratio, n - 1);
}

double partial_transmission(double z_a, double z_p, double z_w, int n) {
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) sum += nth_transmission(z_a, z_p, z_w, k);
  return sum;
}

double total_transmission(double z_a, double z_w) {
  require_positive(z_a, "impedance");
  require_positive(z_w, "impedance");
  return 2.0 * z_w / (z_w + z_a);
}

double reverberation_time(double width, double c_layer) {
  if (width < 0.0) throw ConfigError("width must be non-negative");
  require_positive(c_layer, "sound speed");
  return 2.0 * width / c_layer;
}

} // namespace tammann
