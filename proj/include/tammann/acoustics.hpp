#pragma once

#include <utility>

#include "tammann/eos.hpp"

namespace tammann {

struct AcousticMedium {
  double rho = 1.0;
  double c = 1.0;
  double impedance() const { return rho * c; }
};

/// Medium of a material at rest at pressure p.
AcousticMedium acoustic_medium(double rho, double p, const TammannEos& eos);

/// Pressure transmission and reflection coefficients (p_T/p0, p_R/p0) for a
/// wave in medium A hitting medium B.
std::pair<double, double> interface_coefficients(double z_a, double z_b);

/// Contribution of the N-th transmitted wave through a layer p between a and w.
double nth_transmission(double z_a, double z_p, double z_w, int n);

/// Sum of the first n contributions.
double partial_transmission(double z_a, double z_p, double z_w, int n);

/// Closed-form sum of the series; independent of the layer impedance.
double total_transmission(double z_a, double z_w);

/// Time between successive transmitted waves, 2 width / c.
double reverberation_time(double width, double c_layer);

} // namespace tammann
