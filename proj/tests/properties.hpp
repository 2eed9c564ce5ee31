#pragma once

#include <cstdint>
#include <string>

namespace props {

// Worst values seen over a batch of random exact Riemann problems.
struct ExactReport {
  int cases = 0;
  int vacuum_skipped = 0;
  double phi_residual = 0.0;    // |Phi/Phi'| / pressure scale
  double oracle_p_diff = 0.0;   // |p* - p*_bisection| / (p* + p_inf)
  double rh_residual = 0.0;     // across every shock
  double invariant_drift = 0.0; // entropy and Riemann invariant through fans
  double galilean = 0.0;
  double mirror = 0.0;
  int shocks = 0, fans = 0;

  bool passes() const;
  std::string summary() const;
};

/// Random states across the default air / plastic / water closures.
ExactReport exact_solver_properties(int cases, std::uint64_t seed);

} // namespace props
