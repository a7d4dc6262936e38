#pragma once
#include <array>
#include <cmath>
#include <complex>

namespace pgk {

using cplx = std::complex<double>;

inline constexpr cplx I_UNIT{0.0, 1.0};

//==============================================================================
// 3-component vectors. Complex vectors in the spherical mu-representation are
// stored with rows ordered mu = -1, 0, +1.

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

inline Vec3 operator+(const Vec3 &a, const Vec3 &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3 &a, const Vec3 &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double s, const Vec3 &a) {
  return {s * a[0], s * a[1], s * a[2]};
}
inline double dot(const Vec3 &a, const Vec3 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

// Hermitian inner product <a,b> = sum conj(a_i) b_i
inline cplx inner(const CVec3 &a, const CVec3 &b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] +
         std::conj(a[2]) * b[2];
}
inline double norm(const CVec3 &a) { return std::sqrt(std::real(inner(a, a))); }

inline CVec3 operator+(const CVec3 &a, const CVec3 &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline CVec3 operator-(const CVec3 &a, const CVec3 &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline CVec3 operator*(cplx s, const CVec3 &a) {
  return {s * a[0], s * a[1], s * a[2]};
}

//==============================================================================
// 3x3 complex matrices acting on mu-component column vectors.

struct Mat3 {
  std::array<std::array<cplx, 3>, 3> m{};

  static Mat3 zero() { return {}; }
  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  cplx &operator()(int i, int j) { return m[i][j]; }
  const cplx &operator()(int i, int j) const { return m[i][j]; }
};

inline Mat3 operator+(const Mat3 &a, const Mat3 &b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, j) + b(i, j);
  return r;
}
inline Mat3 operator-(const Mat3 &a, const Mat3 &b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, j) - b(i, j);
  return r;
}
inline Mat3 operator*(cplx s, const Mat3 &a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = s * a(i, j);
  return r;
}
inline Mat3 operator*(const Mat3 &a, const Mat3 &b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 3; ++k)
        s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}
inline CVec3 operator*(const Mat3 &a, const CVec3 &v) {
  CVec3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      r[i] += a(i, k) * v[k];
  return r;
}

inline Mat3 adjoint(const Mat3 &a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = std::conj(a(j, i));
  return r;
}

inline cplx det(const Mat3 &a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline double max_abs(const Mat3 &a) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r = std::max(r, std::abs(a(i, j)));
  return r;
}

//==============================================================================
// mu-components of a Cartesian vector, v_mu = e_mu^dagger . v with
// e_{-1} = (x - iy)/sqrt2, e_0 = z, e_{+1} = (x + iy)/sqrt2.

inline CVec3 to_spherical_components(const CVec3 &cart) {
  const double s = 1.0 / std::sqrt(2.0);
  return {s * (cart[0] + I_UNIT * cart[1]), cart[2],
          s * (cart[0] - I_UNIT * cart[1])};
}
inline CVec3 to_spherical_components(const Vec3 &cart) {
  return to_spherical_components(CVec3{cart[0], cart[1], cart[2]});
}
inline CVec3 to_cartesian_components(const CVec3 &sph) {
  const double s = 1.0 / std::sqrt(2.0);
  return {s * (sph[0] + sph[2]), -I_UNIT * s * (sph[0] - sph[2]), sph[1]};
}

// Unit vectors of spherical momentum coordinates at (theta, phi).
inline Vec3 unit_radial(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}
inline Vec3 unit_polar(double theta, double phi) {
  return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
          -std::sin(theta)};
}
inline Vec3 unit_azimuthal(double /*theta*/, double phi) {
  return {-std::sin(phi), std::cos(phi), 0.0};
}

} // namespace pgk
