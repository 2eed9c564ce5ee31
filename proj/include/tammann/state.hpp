#pragma once

#include <array>
#include <cmath>

namespace tammann {

// Conserved-variable vectors and waves: (rho, rho*u, rho*v, E).
// In 1D runs v is identically zero; in 2D runs u is the axial (x) component
// and v the radial (y) component.
using Vec4 = std::array<double, 4>;

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator*(double s, const Vec4& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}
inline Vec4& operator+=(Vec4& a, const Vec4& b) {
  for (int m = 0; m < 4; ++m) a[m] += b[m];
  return a;
}
inline Vec4& operator-=(Vec4& a, const Vec4& b) {
  for (int m = 0; m < 4; ++m) a[m] -= b[m];
  return a;
}
inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

struct PrimState {
  double rho = 0.0;
  double u = 0.0;  // normal (1D) or axial velocity
  double v = 0.0;  // transverse / radial velocity
  double p = 0.0;

  friend bool operator==(const PrimState&, const PrimState&) = default;
};

struct ConsState {
  double rho = 0.0;
  double mu = 0.0;
  double mv = 0.0;
  double E = 0.0;

  Vec4 vec() const { return {rho, mu, mv, E}; }
  static ConsState from_vec(const Vec4& q) { return {q[0], q[1], q[2], q[3]}; }

  friend bool operator==(const ConsState&, const ConsState&) = default;
};

// Physical flux in the direction of the first velocity component.
inline Vec4 normal_flux(const PrimState& w, const ConsState& q) {
  return {q.mu, q.mu * w.u + w.p, q.mv * w.u, w.u * (q.E + w.p)};
}

// Rotation of the momentum pair into the frame of a unit normal n = (nx, ny):
// normal component first, tangential second.
inline Vec4 rotate_to_normal(const Vec4& q, double nx, double ny) {
  return {q[0], nx * q[1] + ny * q[2], -ny * q[1] + nx * q[2], q[3]};
}
inline Vec4 rotate_from_normal(const Vec4& q, double nx, double ny) {
  return {q[0], nx * q[1] - ny * q[2], ny * q[1] + nx * q[2], q[3]};
}

} // namespace tammann
