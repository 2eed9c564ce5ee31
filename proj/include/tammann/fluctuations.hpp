#pragma once

#include <array>

#include "tammann/state.hpp"

namespace tammann {

// Three-wave decomposition of one edge Riemann problem in wave-propagation
// form. waves[p] are jumps in conserved variables across wave p (p = 0,1,2 for
// the 1-, 2- and 3-wave), speeds[p] their propagation speeds. amdq/apdq are
// the left- and right-going fluctuations.
struct Fluctuations {
  std::array<Vec4, 3> waves{};
  std::array<double, 3> speeds{};
  Vec4 amdq{};
  Vec4 apdq{};
};

// A- = sum (s_p)^- W_p, A+ = sum (s_p)^+ W_p.
inline void assemble_from_waves(Fluctuations& f) {
  f.amdq = {};
  f.apdq = {};
  for (int p = 0; p < 3; ++p) {
    const double s = f.speeds[p];
    if (s < 0.0)
      f.amdq += s * f.waves[p];
    else if (s > 0.0)
      f.apdq += s * f.waves[p];
  }
}

// Frame shift so the contact is stationary; waves are left untouched.
inline void lagrangian_shift(Fluctuations& f) {
  const double s_star = f.speeds[1];
  f.speeds[0] -= s_star;
  f.speeds[1] = 0.0;
  f.speeds[2] -= s_star;
  assemble_from_waves(f);
}

} // namespace tammann
