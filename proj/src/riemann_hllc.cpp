#include "tammann/riemann_hllc.hpp"

#include <algorithm>
#include <cmath>

#include "tammann/error.hpp"

namespace tammann {

std::pair<double, double> davis_speeds(const PrimState& l, const PrimState& r,
                                       const TammannEos& el, const TammannEos& er) {
  const double cl = sound_speed(l, el);
  const double cr = sound_speed(r, er);
  return {std::min(l.u - cl, r.u - cr), std::max(l.u + cl, r.u + cr)};
}

std::pair<double, double> roe_average_speeds(const PrimState& l, const PrimState& r,
                                             const TammannEos& el, const TammannEos& er) {
  const double cl = sound_speed(l, el);
  const double cr = sound_speed(r, er);
  const double wl = std::sqrt(l.rho);
  const double wr = std::sqrt(r.rho);
  const double inv = 1.0 / (wl + wr);

  // Total enthalpy H = c^2/(gamma - 1) + |u|^2/2 for the Tammann closure.
  const double hl = cl * cl / (el.gamma - 1.0) + 0.5 * (l.u * l.u + l.v * l.v);
  const double hr = cr * cr / (er.gamma - 1.0) + 0.5 * (r.u * r.u + r.v * r.v);

  const double u = (wl * l.u + wr * r.u) * inv;
  const double v = (wl * l.v + wr * r.v) * inv;
  const double h = (wl * hl + wr * hr) * inv;
  const double g = (wl * el.gamma + wr * er.gamma) * inv;
  const double c2 = (g - 1.0) * (h - 0.5 * (u * u + v * v));
  if (!(c2 > 0.0)) return davis_speeds(l, r, el, er);
  const double c = std::sqrt(c2);
  return {std::min(l.u - cl, u - c), std::max(u + c, r.u + cr)};
}

HllcStar hllc_star(const PrimState& l, const PrimState& r, const TammannEos& el,
                   const TammannEos& er, double s_left, double s_right) {
  if (!(s_left < s_right))
    throw DegenerateSpeedsError("HLLC requires S_l < S_r");
  const double al = l.rho * (s_left - l.u);
  const double ar = r.rho * (s_right - r.u);
  const double den = al - ar;
  if (den == 0.0 || !std::isfinite(den))
    throw DegenerateSpeedsError("HLLC contact speed denominator vanished");

  HllcStar out;
  out.s_left = s_left;
  out.s_right = s_right;
  // Written relative to u_l so equal velocities and pressures give S* = u exactly.
  out.s_star = l.u + (r.p - l.p + ar * (l.u - r.u)) / den;
  out.p_star = l.p + al * (out.s_star - l.u);

  auto star_state = [&](const PrimState& w, const TammannEos& eos, double s) {
    const ConsState q = prim_to_cons(w, eos);
    const double ratio = (s - w.u) / (s - out.s_star);
    ConsState qs;
    qs.rho = w.rho * ratio;
    qs.mu = qs.rho * out.s_star;
    qs.mv = qs.rho * w.v;
    qs.E = ratio * q.E +
           (out.p_star * (out.s_star - w.u) + (out.p_star - w.p) * w.u) / (s - out.s_star);
    return qs;
  };
  out.q_star_left = star_state(l, el, s_left);
  out.q_star_right = star_state(r, er, s_right);
  return out;
}

Fluctuations hllc_fluctuations(const PrimState& l, const PrimState& r, const TammannEos& el,
                               const TammannEos& er, bool shift, SpeedEstimate estimate) {
  Fluctuations f;
  if (l == r && el.gamma == er.gamma && el.p_inf == er.p_inf) {
    const double c = sound_speed(l, el);
    f.speeds = {l.u - c, l.u, l.u + c};
    if (shift) f.speeds = {-c, 0.0, c};
    return f;
  }
  const auto [sl, sr] = estimate == SpeedEstimate::roe ? roe_average_speeds(l, r, el, er)
                                                       : davis_speeds(l, r, el, er);
  const HllcStar star = hllc_star(l, r, el, er, sl, sr);
  const Vec4 ql = prim_to_cons(l, el).vec();
  const Vec4 qr = prim_to_cons(r, er).vec();
  f.waves[0] = star.q_star_left.vec() - ql;
  f.waves[1] = star.q_star_right.vec() - star.q_star_left.vec();
  f.waves[2] = qr - star.q_star_right.vec();
  f.speeds = {sl, star.s_star, sr};
  if (shift)
    lagrangian_shift(f);
  else
    assemble_from_waves(f);
  return f;
}

} // namespace tammann
