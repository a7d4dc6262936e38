#include "pgk/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pgk {

//==============================================================================
// Associated Legendre

namespace {

// P_l^n for n >= 0 by the standard stable recurrence. Condon-Shortley phase
// lives in the diagonal seed.
double legendre_upward(int l, int n, double x) {
  double pmm = 1.0;
  if (n > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }
  if (l == n)
    return pmm;
  double pmmp1 = x * (2.0 * n + 1.0) * pmm;
  if (l == n + 1)
    return pmmp1;
  double pll = 0.0;
  for (int ll = n + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + n - 1.0) * pmm) / (ll - n);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double factorial_ratio(int a, int b) {
  // (a)! / (b)! for a <= b, as a product to keep intermediates tame
  double r = 1.0;
  for (int k = a + 1; k <= b; ++k)
    r /= k;
  return r;
}

} // namespace

double assoc_legendre(int l, int n, double x) {
  if (l < 0 || std::abs(n) > l)
    throw std::domain_error("assoc_legendre: require 0 <= |n| <= l, got l=" +
                            std::to_string(l) + " n=" + std::to_string(n));
  if (std::abs(x) > 1.0)
    throw std::domain_error("assoc_legendre: |x| > 1");
  if (n < 0) {
    // P_l^{-n} = (-1)^n (l-n)!/(l+n)! P_l^n
    const int m = -n;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial_ratio(l - m, l + m) * legendre_upward(l, m, x);
  }
  return legendre_upward(l, n, x);
}

double assoc_legendre_norm(int l, int n, double x) {
  if (l < 0 || std::abs(n) > l)
    throw std::domain_error("assoc_legendre_norm: invalid (l, n)");
  if (std::abs(x) > 1.0)
    throw std::domain_error("assoc_legendre_norm: |x| > 1");
  const int m = std::abs(n);
  // Seed: normalized P~_m^m = (-1)^m sqrt((2m+1)/(4pi) prod (2k-1)/(2k)) s^m
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  double pmm = std::sqrt(1.0 / (4.0 * M_PI));
  for (int k = 1; k <= m; ++k)
    pmm *= -s * std::sqrt((2.0 * k + 1.0) / (2.0 * k));
  if (l == m) {
    return (n >= 0 || m % 2 == 0) ? pmm : -pmm;
  }
  double pm1 = pmm;
  double pl = x * std::sqrt(2.0 * m + 3.0) * pmm;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double a = std::sqrt((4.0 * ll * ll - 1.0) /
                               (double(ll) * ll - double(m) * m));
    const double b = std::sqrt(((2.0 * ll + 1.0) * (ll - 1.0 - m) *
                                (ll - 1.0 + m)) /
                               ((2.0 * ll - 3.0) *
                                (double(ll) * ll - double(m) * m)));
    const double pnew = a * x * pl - b * pm1;
    pm1 = pl;
    pl = pnew;
  }
  // Negative order: P~_l^{-m} = (-1)^m P~_l^m for the normalized functions.
  return (n >= 0 || m % 2 == 0) ? pl : -pl;
}

cplx sph_harm(SphHarmIndex idx, double theta, double phi) {
  if (!idx.valid())
    throw std::domain_error("sph_harm: invalid index l=" +
                            std::to_string(idx.l) +
                            " n=" + std::to_string(idx.n));
  const double p = assoc_legendre_norm(idx.l, idx.n, std::cos(theta));
  return p * std::exp(I_UNIT * double(idx.n) * phi);
}

//==============================================================================
// Spherical Bessel

namespace {

double sph_bessel_upward(int l, double x) {
  double jm = std::sin(x) / x;
  if (l == 0)
    return jm;
  double j = jm / x - std::cos(x) / x;
  for (int k = 1; k < l; ++k) {
    const double jn = (2.0 * k + 1.0) / x * j - jm;
    jm = j;
    j = jn;
  }
  return j;
}

double sph_bessel_miller(int l, double x) {
  const int lstart = l + int(std::ceil(std::sqrt(40.0 * l))) + 16;
  constexpr double kBig = 1e250;
  constexpr double kBigInv = 1e-250;
  double jp = 0.0;
  double j = 1.0;
  double target = 0.0;
  double j1 = 0.0, j0 = 0.0;
  for (int k = lstart; k >= 1; --k) {
    const double jm = (2.0 * k + 1.0) / x * j - jp;
    jp = j;
    j = jm;
    if (k - 1 == l)
      target = j;
    if (k - 1 == 1)
      j1 = j;
    if (std::abs(j) > kBig) {
      j *= kBigInv;
      jp *= kBigInv;
      target *= kBigInv;
      j1 *= kBigInv;
    }
  }
  j0 = j;
  if (l == 0)
    target = j0;
  // Normalize against whichever anchor is better conditioned.
  const double ref0 = std::sin(x) / x;
  const double ref1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (std::abs(j0) >= std::abs(j1))
    return target * (ref0 / j0);
  return target * (ref1 / j1);
}

} // namespace

double sph_bessel(int l, double x) {
  if (l < 0)
    throw std::domain_error("sph_bessel: l < 0");
  if (x < 0.0)
    throw std::domain_error("sph_bessel: x < 0");
  if (x == 0.0)
    return l == 0 ? 1.0 : 0.0;
  if (x < 1e-4) {
    // Series head; avoids 0/0 noise for tiny arguments.
    double t = 1.0;
    for (int k = 1; k <= l; ++k)
      t *= x / (2.0 * k + 1.0);
    return t * (1.0 - x * x / (2.0 * (2.0 * l + 3.0)));
  }
  if (l == 0)
    return std::sin(x) / x;
  if (double(l) <= x)
    return sph_bessel_upward(l, x);
  return sph_bessel_miller(l, x);
}

//==============================================================================
// Spin-1 generators and rotations

const SpinMatrices &spin_matrices() {
  static const SpinMatrices s = [] {
    SpinMatrices r;
    const double q = 1.0 / std::sqrt(2.0);
    // Spherical basis without the Condon-Shortley sign on e_{+1}; these are
    // the Cartesian rotation generators transformed to that basis.
    r.s1(0, 1) = q;
    r.s1(1, 0) = q;
    r.s1(1, 2) = -q;
    r.s1(2, 1) = -q;

    r.s2(0, 1) = I_UNIT * q;
    r.s2(1, 0) = -I_UNIT * q;
    r.s2(1, 2) = -I_UNIT * q;
    r.s2(2, 1) = I_UNIT * q;

    r.s3(0, 0) = -1.0;
    r.s3(2, 2) = 1.0;
    return r;
  }();
  return s;
}

Mat3 exp_spin_z(double a) {
  Mat3 r;
  r(0, 0) = std::exp(I_UNIT * a);
  r(1, 1) = 1.0;
  r(2, 2) = std::exp(-I_UNIT * a);
  return r;
}

Mat3 exp_spin_y(double theta) {
  // exp(-i s2 t) = I + (cos t - 1) s2^2 - i sin t s2; exact for spin 1.
  const auto &s = spin_matrices();
  const Mat3 s2sq = s.s2 * s.s2;
  return Mat3::identity() + (std::cos(theta) - 1.0) * s2sq +
         (-I_UNIT * std::sin(theta)) * s.s2;
}

RotationMatrix rotation_matrix(double phi, double theta, double chi) {
  RotationMatrix rm;
  rm.phi = phi;
  rm.theta = theta;
  rm.chi = chi;
  rm.d = exp_spin_z(phi) * exp_spin_y(theta) * exp_spin_z(chi);
  return rm;
}

} // namespace pgk
