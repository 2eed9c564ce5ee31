#pragma once

#include "tammann/eos.hpp"
#include "tammann/fluctuations.hpp"
#include "tammann/state.hpp"

namespace tammann {

enum class Side { left, right };
enum class WaveKind { shock, rarefaction };

/// Exact similarity solution of a Riemann problem for the Euler equations with
/// Tammann closures that may differ on the two sides of the contact.
///
/// Nonlinear waves are described by a head and tail speed; for shocks both
/// equal the shock speed. `s_left` / `s_right` are the representative 1- and
/// 3-wave speeds used by the wave-propagation update: the shock speed, or the
/// mean of head and tail for a rarefaction fan.
struct RiemannFan {
  PrimState left, right;
  TammannEos eos_left, eos_right;

  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  WaveKind kind_left = WaveKind::shock;
  WaveKind kind_right = WaveKind::shock;

  double left_head = 0.0, left_tail = 0.0;
  double right_tail = 0.0, right_head = 0.0;
  double s_left = 0.0, s_star = 0.0, s_right = 0.0;

  int iterations = 0;

  PrimState star_left() const { return {rho_star_left, u_star, left.v, p_star}; }
  PrimState star_right() const { return {rho_star_right, u_star, right.v, p_star}; }
};

struct ExactSolverOptions {
  int max_iterations = 100;
  double residual_tolerance = 1e-10;  // relative to the pressure scale
  double step_tolerance = 1e-12;      // relative to p_star + p_inf
};

/// u_star reached from `state` through a shock of star pressure p_star.
/// Throws InvalidStateError when the mass-flux radicand is not positive.
double phi_shock(double p_star, const PrimState& state, const TammannEos& eos, Side side);

/// u_star reached from `state` through a rarefaction to star pressure p_star.
double phi_rarefaction(double p_star, const PrimState& state, const TammannEos& eos, Side side);

/// Post-shock density from the Hugoniot of `state` (gamma does not jump
/// across the acoustic waves).
double shock_density(double p_star, const PrimState& state, const TammannEos& eos);

/// Mass flux through a shock with star pressure p_star.
double shock_mass_flux(double p_star, const PrimState& state, const TammannEos& eos);

/// Phi(p) = phi_right(p) - phi_left(p), choosing the shock or rarefaction
/// branch on each side from the sign of p - p_k.
double star_function(double p, const PrimState& left, const PrimState& right,
                     const TammannEos& eos_l, const TammannEos& eos_r);

/// Solves Phi(p_star) = 0 with a safeguarded Newton iteration.
/// Throws VacuumError when no admissible root exists and ConvergenceError
/// when the iteration budget is exhausted.
RiemannFan solve_star(const PrimState& left, const PrimState& right, const TammannEos& eos_l,
                      const TammannEos& eos_r, const ExactSolverOptions& opts = {});

/// Primitive state at x/t = xi.
PrimState sample(const RiemannFan& fan, double xi);

/// Wave-propagation data of the exact solution. Without the Lagrangian shift
/// the fluctuations are the Godunov flux differences f(q(0)) - f(q_l) and
/// f(q_r) - f(q(0)); with it, speeds are shifted by -S* and the fluctuations
/// are assembled from the waves.
Fluctuations exact_fluctuations(const PrimState& left, const PrimState& right,
                                const TammannEos& eos_l, const TammannEos& eos_r,
                                bool lagrangian_shift);

Fluctuations exact_fluctuations(const RiemannFan& fan, bool lagrangian_shift);

} // namespace tammann
