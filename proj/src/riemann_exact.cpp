#include "tammann/riemann_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tammann/error.hpp"

namespace tammann {

namespace {

// Zero-strength waves within this relative pressure margin use the shock
// branch, whose limit is continuous and free of 0/0 in the fan formulas.
constexpr double kDegenerateWave = 1e-12;

bool same_eos(const TammannEos& a, const TammannEos& b) {
  return a.gamma == b.gamma && a.p_inf == b.p_inf;
}

bool is_shock(double p_star, const PrimState& w, const TammannEos& eos) {
  const double pt = w.p + eos.p_inf;
  return p_star - w.p >= -kDegenerateWave * pt;
}

// (pt_star / pt)^z - 1 where dp = pt_star - pt, without cancellation when
// dp is small against pt.
double ratio_power_m1(double pt_star, double pt, double dp, double z) {
  const double x = dp / pt;
  if (std::abs(x) < 0.5) return std::expm1(z * std::log1p(x));
  return std::pow(pt_star / pt, z) - 1.0;
}

// F_k(p) = -[u]_k and its derivative, so Phi(p) = F_l + F_r + u_r - u_l.
struct BranchValue {
  double f;
  double df;
};

BranchValue branch(double p, const PrimState& w, const TammannEos& eos) {
  const double g = eos.gamma;
  const double pt_k = w.p + eos.p_inf;
  const double pt_star = p + eos.p_inf;
  if (is_shock(p, w, eos)) {
    const double beta = (g - 1.0) / (g + 1.0);
    const double rad = pt_star + beta * pt_k;
    const double q = std::sqrt(w.rho * rad * 0.5 * (g + 1.0));
    const double f = (p - w.p) / q;
    const double df = (1.0 - 0.5 * (p - w.p) / rad) / q;
    return {f, df};
  }
  const double c = std::sqrt(g * pt_k / w.rho);
  const double z = 0.5 * (g - 1.0) / g;
  // ratio^z - 1 without cancellation near the outer state.
  const double f = 2.0 * c / (g - 1.0) * ratio_power_m1(pt_star, pt_k, p - w.p, z);
  const double df = std::pow(pt_star / pt_k, -0.5 * (g + 1.0) / g) / (w.rho * c);
  return {f, df};
}

std::string describe(const PrimState& l, const PrimState& r, const TammannEos& el,
                     const TammannEos& er) {
  std::ostringstream os;
  os.precision(17);
  os << "left (rho=" << l.rho << ", u=" << l.u << ", p=" << l.p << ", " << el.label
     << ") right (rho=" << r.rho << ", u=" << r.u << ", p=" << r.p << ", " << er.label << ")";
  return os.str();
}

// Initial iterate: two-rarefaction estimate when both sides share a closure,
// otherwise the linear-acoustic impedance average.
double initial_guess(const PrimState& l, const PrimState& r, const TammannEos& el,
                     const TammannEos& er) {
  const double cl = sound_speed(l, el);
  const double cr = sound_speed(r, er);
  if (same_eos(el, er)) {
    const double g = el.gamma;
    const double z = 0.5 * (g - 1.0) / g;
    const double num = cl + cr - 0.5 * (g - 1.0) * (r.u - l.u);
    if (num > 0.0) {
      const double den = cl / std::pow(l.p + el.p_inf, z) + cr / std::pow(r.p + er.p_inf, z);
      return std::pow(num / den, 1.0 / z) - el.p_inf;
    }
  }
  const double zl = l.rho * cl;
  const double zr = r.rho * cr;
  return (zr * l.p + zl * r.p - zl * zr * (r.u - l.u)) / (zl + zr);
}

} // namespace

double shock_mass_flux(double p_star, const PrimState& w, const TammannEos& eos) {
  const double g = eos.gamma;
  const double rad = (p_star + eos.p_inf) + (w.p + eos.p_inf) * (g - 1.0) / (g + 1.0);
  if (!(rad > 0.0) || !(w.rho > 0.0))
    throw InvalidStateError("shock mass flux: negative radicand for the requested star pressure");
  return std::sqrt(w.rho * rad * 0.5 * (g + 1.0));
}

double shock_density(double p_star, const PrimState& w, const TammannEos& eos) {
  const double g = eos.gamma;
  const double beta = (g - 1.0) / (g + 1.0);
  const double ratio = (p_star + eos.p_inf) / (w.p + eos.p_inf);
  return w.rho * (ratio + beta) / (ratio * beta + 1.0);
}

double phi_shock(double p_star, const PrimState& w, const TammannEos& eos, Side side) {
  check_state(w, eos);
  const double q = shock_mass_flux(p_star, w, eos);
  return side == Side::left ? w.u - (p_star - w.p) / q : w.u + (p_star - w.p) / q;
}

double phi_rarefaction(double p_star, const PrimState& w, const TammannEos& eos, Side side) {
  check_state(w, eos);
  const double pt_star = p_star + eos.p_inf;
  if (!(pt_star > 0.0))
    throw InvalidStateError("rarefaction: p_star + p_inf must be positive");
  const double g = eos.gamma;
  const double c = sound_speed(w, eos);
  const double jump =
      -2.0 * c / (g - 1.0) * ratio_power_m1(pt_star, w.p + eos.p_inf, p_star - w.p, 0.5 * (g - 1.0) / g);
  return side == Side::left ? w.u + jump : w.u - jump;
}

double star_function(double p, const PrimState& l, const PrimState& r, const TammannEos& el,
                     const TammannEos& er) {
  return branch(p, l, el).f + branch(p, r, er).f + r.u - l.u;
}

RiemannFan solve_star(const PrimState& l, const PrimState& r, const TammannEos& el,
                      const TammannEos& er, const ExactSolverOptions& opts) {
  check_state(l, el);
  check_state(r, er);

  RiemannFan fan;
  fan.left = l;
  fan.right = r;
  fan.eos_left = el;
  fan.eos_right = er;

  const double cl = sound_speed(l, el);
  const double cr = sound_speed(r, er);

  double p_star;
  if (l.u == r.u && l.p == r.p && same_eos(el, er)) {
    // Contact-only data (including identical states): the star pressure is exact.
    p_star = l.p;
  } else {
    const double p_lo = -std::min(el.p_inf, er.p_inf);
    const double pt_scale = std::max(l.p + el.p_inf, r.p + er.p_inf);
    const double p_floor = p_lo + 1e-14 * pt_scale;
    const double p_scale = std::max({std::abs(l.p), std::abs(r.p), kAtmosphere});

    auto phi = [&](double p) { return star_function(p, l, r, el, er); };
    auto dphi = [&](double p) { return branch(p, l, el).df + branch(p, r, er).df; };

    double a = p_floor;
    const double phi_a = phi(a);
    if (phi_a > 0.0)
      throw VacuumError("Riemann problem generates vacuum: " + describe(l, r, el, er));
    if (phi_a == 0.0) {
      p_star = a;
    } else {
      double b = std::max({l.p, r.p, p_floor});
      int expand = 0;
      while (phi(b) < 0.0) {
        b = p_lo + 2.0 * (b - p_lo);
        if (++expand > 2000 || !std::isfinite(b))
          throw ConvergenceError("unable to bracket the star pressure: " + describe(l, r, el, er));
      }

      double p = initial_guess(l, r, el, er);
      if (!(p > a && p < b) || !std::isfinite(p)) p = 0.5 * (a + b);

      bool converged = false;
      double last_dp = std::numeric_limits<double>::infinity();
      int it = 0;
      for (; it < opts.max_iterations; ++it) {
        const double f = phi(p);
        if (f == 0.0) {
          converged = true;
          break;
        }
        if (f < 0.0)
          a = p;
        else
          b = p;
        const double step = f / dphi(p);
        double p_new = p - step;
        const bool inside = p_new > a && p_new < b && std::isfinite(p_new);
        if (std::abs(step) <= opts.residual_tolerance * p_scale &&
            last_dp <= opts.step_tolerance * (p - p_lo)) {
          // Residual already within tolerance; keep the final Newton correction.
          if (inside) p = p_new;
          converged = true;
          break;
        }
        if (!inside) p_new = 0.5 * (a + b);
        last_dp = std::abs(p_new - p);
        p = p_new;
        if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b))) {
          converged = true;
          break;
        }
      }
      if (!converged) {
        std::ostringstream os;
        os.precision(17);
        os << "star pressure iteration did not converge after " << opts.max_iterations
           << " iterations (last p=" << p << ", bracket [" << a << ", " << b
           << "], Phi=" << phi(p) << "): " << describe(l, r, el, er);
        throw ConvergenceError(os.str());
      }
      fan.iterations = it + 1;
      p_star = p;
    }
  }

  fan.p_star = p_star;

  double u_left, u_right;
  if (is_shock(p_star, l, el)) {
    fan.kind_left = WaveKind::shock;
    const double q = shock_mass_flux(p_star, l, el);
    u_left = l.u - (p_star - l.p) / q;
    fan.rho_star_left = shock_density(p_star, l, el);
    fan.left_head = fan.left_tail = fan.s_left = l.u - q / l.rho;
  } else {
    fan.kind_left = WaveKind::rarefaction;
    u_left = phi_rarefaction(p_star, l, el, Side::left);
    fan.rho_star_left = isentropic_density(l, p_star, el);
  }
  if (is_shock(p_star, r, er)) {
    fan.kind_right = WaveKind::shock;
    const double q = shock_mass_flux(p_star, r, er);
    u_right = r.u + (p_star - r.p) / q;
    fan.rho_star_right = shock_density(p_star, r, er);
    fan.right_head = fan.right_tail = fan.s_right = r.u + q / r.rho;
  } else {
    fan.kind_right = WaveKind::rarefaction;
    u_right = phi_rarefaction(p_star, r, er, Side::right);
    fan.rho_star_right = isentropic_density(r, p_star, er);
  }
  fan.u_star = 0.5 * (u_left + u_right);
  fan.s_star = fan.u_star;

  if (fan.kind_left == WaveKind::rarefaction) {
    const double c_star = std::sqrt(el.gamma * (p_star + el.p_inf) / fan.rho_star_left);
    fan.left_head = l.u - cl;
    fan.left_tail = fan.u_star - c_star;
    fan.s_left = 0.5 * (fan.left_head + fan.left_tail);
  }
  if (fan.kind_right == WaveKind::rarefaction) {
    const double c_star = std::sqrt(er.gamma * (p_star + er.p_inf) / fan.rho_star_right);
    fan.right_head = r.u + cr;
    fan.right_tail = fan.u_star + c_star;
    fan.s_right = 0.5 * (fan.right_head + fan.right_tail);
  }
  return fan;
}

PrimState sample(const RiemannFan& fan, double xi) {
  if (xi <= fan.u_star) {
    const PrimState& w = fan.left;
    const TammannEos& eos = fan.eos_left;
    if (fan.kind_left == WaveKind::shock) return xi < fan.s_left ? w : fan.star_left();
    if (xi <= fan.left_head) return w;
    if (xi >= fan.left_tail) return fan.star_left();
    const double g = eos.gamma;
    const double c = std::sqrt(g * (w.p + eos.p_inf) / w.rho);
    const double ratio = 2.0 / (g + 1.0) + (g - 1.0) * (w.u - xi) / ((g + 1.0) * c);
    PrimState out;
    out.u = ((g - 1.0) * w.u + 2.0 * (xi + c)) / (g + 1.0);
    out.rho = w.rho * std::pow(ratio, 2.0 / (g - 1.0));
    out.p = (w.p + eos.p_inf) * std::pow(ratio, 2.0 * g / (g - 1.0)) - eos.p_inf;
    out.v = w.v;
    return out;
  }
  const PrimState& w = fan.right;
  const TammannEos& eos = fan.eos_right;
  if (fan.kind_right == WaveKind::shock) return xi > fan.s_right ? w : fan.star_right();
  if (xi >= fan.right_head) return w;
  if (xi <= fan.right_tail) return fan.star_right();
  const double g = eos.gamma;
  const double c = std::sqrt(g * (w.p + eos.p_inf) / w.rho);
  const double ratio = 2.0 / (g + 1.0) - (g - 1.0) * (w.u - xi) / ((g + 1.0) * c);
  PrimState out;
  out.u = ((g - 1.0) * w.u + 2.0 * (xi - c)) / (g + 1.0);
  out.rho = w.rho * std::pow(ratio, 2.0 / (g - 1.0));
  out.p = (w.p + eos.p_inf) * std::pow(ratio, 2.0 * g / (g - 1.0)) - eos.p_inf;
  out.v = w.v;
  return out;
}

Fluctuations exact_fluctuations(const RiemannFan& fan, bool shift) {
  const ConsState ql = prim_to_cons(fan.left, fan.eos_left);
  const ConsState qsl = prim_to_cons(fan.star_left(), fan.eos_left);
  const ConsState qsr = prim_to_cons(fan.star_right(), fan.eos_right);
  const ConsState qr = prim_to_cons(fan.right, fan.eos_right);

  Fluctuations f;
  f.waves[0] = qsl.vec() - ql.vec();
  f.waves[1] = qsr.vec() - qsl.vec();
  f.waves[2] = qr.vec() - qsr.vec();
  f.speeds = {fan.s_left, fan.s_star, fan.s_right};

  if (shift) {
    lagrangian_shift(f);
    return f;
  }
  const PrimState w0 = sample(fan, 0.0);
  const TammannEos& eos0 = 0.0 <= fan.u_star ? fan.eos_left : fan.eos_right;
  const Vec4 f0 = normal_flux(w0, prim_to_cons(w0, eos0));
  f.amdq = f0 - normal_flux(fan.left, ql);
  f.apdq = normal_flux(fan.right, qr) - f0;
  return f;
}

Fluctuations exact_fluctuations(const PrimState& left, const PrimState& right,
                                const TammannEos& eos_l, const TammannEos& eos_r, bool shift) {
  return exact_fluctuations(solve_star(left, right, eos_l, eos_r), shift);
}

} // namespace tammann
