#include "tammann/eos.hpp"

#include <cmath>
#include <sstream>

#include "tammann/error.hpp"

namespace tammann {

namespace {

std::string describe(const PrimState& w, const TammannEos& eos) {
  std::ostringstream os;
  os.precision(17);
  os << "(rho=" << w.rho << ", u=" << w.u << ", v=" << w.v << ", p=" << w.p
     << ") for material '" << eos.label << "' (gamma=" << eos.gamma
     << ", p_inf=" << eos.p_inf << ")";
  return os.str();
}

} // namespace

void TammannEos::validate() const {
  if (!(gamma > 1.0) || !std::isfinite(gamma))
    throw ConfigError("material '" + label + "': gamma must exceed 1");
  if (!(p_inf >= 0.0) || !std::isfinite(p_inf))
    throw ConfigError("material '" + label + "': p_inf must be non-negative");
}

double pressure(double rho, double e, const TammannEos& eos) {
  if (!std::isfinite(rho) || !std::isfinite(e))
    throw InvalidStateError("pressure: non-finite input");
  if (!(rho > 0.0)) throw InvalidStateError("pressure: non-positive density");
  return (eos.gamma - 1.0) * rho * e - eos.gamma * eos.p_inf;
}

double internal_energy(double rho, double p, const TammannEos& eos) {
  if (!std::isfinite(rho) || !std::isfinite(p))
    throw InvalidStateError("internal_energy: non-finite input");
  if (!(rho > 0.0)) throw InvalidStateError("internal_energy: non-positive density");
  if (!(p + eos.p_inf > 0.0))
    throw InvalidStateError("internal_energy: p + p_inf must be positive");
  return (p + eos.gamma * eos.p_inf) / ((eos.gamma - 1.0) * rho);
}

bool is_admissible(const PrimState& w, const TammannEos& eos) {
  return std::isfinite(w.rho) && std::isfinite(w.u) && std::isfinite(w.v) &&
         std::isfinite(w.p) && w.rho > 0.0 && w.p + eos.p_inf > 0.0;
}

void check_state(const PrimState& w, const TammannEos& eos) {
  if (!is_admissible(w, eos)) throw InvalidStateError("inadmissible state " + describe(w, eos));
}

double sound_speed(const PrimState& w, const TammannEos& eos) {
  check_state(w, eos);
  return std::sqrt(eos.gamma * (w.p + eos.p_inf) / w.rho);
}

ConsState prim_to_cons(const PrimState& w, const TammannEos& eos) {
  check_state(w, eos);
  const double rho_e = (w.p + eos.gamma * eos.p_inf) / (eos.gamma - 1.0);
  return {w.rho, w.rho * w.u, w.rho * w.v, rho_e + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

PrimState cons_to_prim_unchecked(const ConsState& q, const TammannEos& eos) {
  PrimState w;
  w.rho = q.rho;
  w.u = q.mu / q.rho;
  w.v = q.mv / q.rho;
  const double rho_e = q.E - 0.5 * (q.mu * w.u + q.mv * w.v);
  w.p = (eos.gamma - 1.0) * rho_e - eos.gamma * eos.p_inf;
  return w;
}

PrimState cons_to_prim(const ConsState& q, const TammannEos& eos) {
  if (!(q.rho > 0.0) || !std::isfinite(q.rho))
    throw InvalidStateError("cons_to_prim: non-positive density");
  PrimState w;
  w.rho = q.rho;
  w.u = q.mu / q.rho;
  w.v = q.mv / q.rho;
  const double rho_e = q.E - 0.5 * (q.mu * w.u + q.mv * w.v);
  w.p = (eos.gamma - 1.0) * rho_e - eos.gamma * eos.p_inf;
  check_state(w, eos);
  return w;
}

double isentropic_density(const PrimState& w, double p_star, const TammannEos& eos) {
  check_state(w, eos);
  const double ratio = (p_star + eos.p_inf) / (w.p + eos.p_inf);
  if (!(ratio > 0.0) || !std::isfinite(ratio))
    throw InvalidStateError("isentropic_density: p_star + p_inf must be positive");
  return w.rho * std::pow(ratio, 1.0 / eos.gamma);
}

MaterialTable MaterialTable::defaults() {
  MaterialTable t;
  t.set("air", {{1.4, 0.0, "air"}, 1.204});
  t.set("plastic", {{1.1, 4.79e9, "plastic"}, 1050.0});
  t.set("water", {{7.15, 0.3e9, "water"}, 1000.0});
  return t;
}

void MaterialTable::set(const std::string& name, Material m) {
  m.eos.label = name;
  m.eos.validate();
  if (!(m.rho_ref > 0.0)) throw ConfigError("material '" + name + "': reference density must be positive");
  materials_[name] = std::move(m);
}

const Material& MaterialTable::at(const std::string& name) const {
  auto it = materials_.find(name);
  if (it == materials_.end()) throw ConfigError("unknown material '" + name + "'");
  return it->second;
}

bool MaterialTable::contains(const std::string& name) const {
  return materials_.count(name) != 0;
}

std::vector<std::string> MaterialTable::names() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : materials_) out.push_back(k);
  return out;
}

} // namespace tammann
