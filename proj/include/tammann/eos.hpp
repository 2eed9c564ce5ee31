#pragma once

#include <map>
#include <string>
#include <vector>

#include "tammann/state.hpp"

namespace tammann {

/// Tammann (stiffened gas) closure p = (gamma - 1) rho e - gamma p_inf.
struct TammannEos {
  double gamma = 1.4;
  double p_inf = 0.0;  // Pa
  std::string label;

  /// Throws ConfigError unless gamma > 1 and p_inf >= 0.
  void validate() const;
};

inline constexpr double kAtmosphere = 101325.0;  // Pa

double pressure(double rho, double e, const TammannEos& eos);
double internal_energy(double rho, double p, const TammannEos& eos);

/// c = sqrt(gamma (p + p_inf) / rho). Throws InvalidStateError when
/// p + p_inf <= 0 or rho <= 0.
double sound_speed(const PrimState& w, const TammannEos& eos);

ConsState prim_to_cons(const PrimState& w, const TammannEos& eos);
PrimState cons_to_prim(const ConsState& q, const TammannEos& eos);
/// Same algebra without admissibility checks (may return rho <= 0 or NaN).
PrimState cons_to_prim_unchecked(const ConsState& q, const TammannEos& eos);

/// Density reached from `w` along its isentrope at pressure p_star.
double isentropic_density(const PrimState& w, double p_star, const TammannEos& eos);

/// Throws InvalidStateError if `w` is not admissible for `eos`.
void check_state(const PrimState& w, const TammannEos& eos);
bool is_admissible(const PrimState& w, const TammannEos& eos);

// Material catalogue: EOS parameters plus the reference density used to
// build quiescent ambient states.
struct Material {
  TammannEos eos;
  double rho_ref = 1.0;  // kg/m^3 at 1 atm
};

class MaterialTable {
public:
  /// Air 1.4 / 0, plastic (polystyrene) 1.1 / 4.79 GPa, water 7.15 / 0.3 GPa.
  /// Reference densities 1.204, 1050 and 1000 kg/m^3.
  static MaterialTable defaults();

  void set(const std::string& name, Material m);
  const Material& at(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

private:
  std::map<std::string, Material> materials_;
};

} // namespace tammann
