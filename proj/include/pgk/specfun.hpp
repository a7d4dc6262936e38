#pragma once
#include "pgk/linalg.hpp"

namespace pgk {

//==============================================================================
// Special-function kernel shared by every other module: associated Legendre
// functions, orthonormal spherical harmonics, spherical Bessel functions, and
// the spin-1 generators / rotation matrices in the spherical mu-basis.
//==============================================================================

struct SphHarmIndex {
  int l = 0; // degree, l >= 0
  int n = 0; // order, |n| <= l

  bool valid() const { return l >= 0 && std::abs(n) <= l; }
};

//! Associated Legendre P_l^n(x) with the Condon-Shortley phase, by upward
//! recurrence in l from the diagonal seed. Throws std::domain_error for
//! |n| > l or |x| > 1. Stable in double for l up to ~100.
double assoc_legendre(int l, int n, double x);

//! Orthonormalized associated Legendre, i.e. Y_l^n(theta, 0) as a function of
//! x = cos(theta): includes sqrt((2l+1)(l-n)!/(4 pi (l+n)!)).
double assoc_legendre_norm(int l, int n, double x);

//! Orthonormal spherical harmonic, int |Y_l^n|^2 dOmega = 1, with
//! Y_l^{-n} = (-1)^n conj(Y_l^n).
cplx sph_harm(SphHarmIndex idx, double theta, double phi);

//! Spherical Bessel j_l(x) for l >= 0, x >= 0. Downward (Miller) recurrence
//! normalized against j_0/j_1 for x < l, upward recurrence otherwise.
double sph_bessel(int l, double x);

struct SpinMatrices {
  Mat3 s1, s2, s3; // Hermitian, [s_i, s_j] = i eps_ijk s_k, s3 = diag(-1,0,+1)
};

//! Dimensionless spin-1 generators in the spherical basis (rows mu = -1,0,+1).
const SpinMatrices &spin_matrices();

struct RotationMatrix {
  Mat3 d;
  double phi = 0.0, theta = 0.0, chi = 0.0; // Euler angles
};

//! D(phi, theta, chi) = exp(-i s3 phi) exp(-i s2 theta) exp(-i s3 chi),
//! evaluated through the exact finite exponentials of the generators.
//! Column lambda (ordered -1, 0, +1) holds the helicity basis vector at
//! momentum direction (theta, phi) in the gauge with Euler angle chi.
RotationMatrix rotation_matrix(double phi, double theta, double chi);

//! Exact exp(-i s3 a) = diag(e^{ia}, 1, e^{-ia}).
Mat3 exp_spin_z(double a);
//! Exact exp(-i s2 theta) via the spin-1 Rodrigues formula.
Mat3 exp_spin_y(double theta);

} // namespace pgk
