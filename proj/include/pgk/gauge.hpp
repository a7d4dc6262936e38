#pragma once
#include "pgk/errors.hpp"
#include "pgk/linalg.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace pgk {

//==============================================================================
// Geometric gauge choices chi(theta, phi), helicity triads, the momentum-space
// gauge potential a^(chi) with its Dirac strings, and the spin/orbital content
// of the basis vectors.
//==============================================================================

inline constexpr double kDefaultStringEps = 1e-6; // rad

//------------------------------------------------------------------------------
// Tabulated chi(theta, phi): uniform grid, periodic in phi, bicubic
// (Catmull-Rom) interpolation. Immutable after construction.
class GaugeTable {
public:
  GaugeTable(std::vector<double> theta_nodes, std::vector<double> phi_nodes,
             std::vector<double> chi_values); // row-major theta, then phi

  static GaugeTable from_csv(std::istream &in);
  static GaugeTable from_function(double (*f)(double, double), int n_theta,
                                  int n_phi);

  double chi(double theta, double phi) const;
  // d(chi)/d(theta), d(chi)/d(phi) by central differences with the table step
  double dchi_dtheta(double theta, double phi) const;
  double dchi_dphi(double theta, double phi) const;

  double theta_min() const { return theta_[0]; }
  double theta_max() const { return theta_.back(); }

private:
  std::vector<double> theta_, phi_, chi_;
  double dtheta_ = 0.0, dphi_ = 0.0;
  double value_at(int it, int ip) const;
  double interp_phi(int it, double phi) const;
};

//------------------------------------------------------------------------------
struct GaugeSpec {
  enum class Kind { Zero, LinearM, Tabulated };

  Kind kind = Kind::Zero;
  int m = 0; // chi = -m phi for LinearM
  std::shared_ptr<const GaugeTable> table;
  std::string description;

  static GaugeSpec zero();
  static GaugeSpec linear_m(int m);
  static GaugeSpec tabulated(std::shared_ptr<const GaugeTable> table,
                             std::string description = "tabulated");

  double chi(double theta, double phi) const;
  bool is_linear() const { return kind != Kind::Tabulated; }
  // effective m for the axis strings: Zero behaves as LinearM(0)
  int linear_m_value() const { return kind == Kind::LinearM ? m : 0; }

  std::string name() const;
};

//------------------------------------------------------------------------------
struct HelicityTriad {
  double theta = 0.0, phi = 0.0;
  CVec3 e_minus, e_zero, e_plus; // mu-components, rows mu = -1, 0, +1
  GaugeSpec gauge;

  const CVec3 &helicity(int lambda) const {
    return lambda < 0 ? e_minus : (lambda > 0 ? e_plus : e_zero);
  }
};

//! Helicity basis vector e_lambda^(chi)(theta, phi) in mu-components,
//! lambda in {-1, +1}. At the poles the limit is taken along phi = 0.
CVec3 helicity_vector(int lambda, double theta, double phi,
                      const GaugeSpec &gauge);

//! Full triad (e_minus, e_zero = p-hat, e_plus) at (theta, phi).
HelicityTriad triad(double theta, double phi, const GaugeSpec &gauge);

//------------------------------------------------------------------------------
struct GaugePotentialSample {
  double p = 0.0, theta = 0.0, phi = 0.0;
  Vec3 vector{}; // Cartesian components, units 1/p
  GaugeSpec gauge;

  double phi_hat_component() const {
    return dot(vector, unit_azimuthal(theta, phi));
  }
};

//! Momentum-space gauge potential a^(chi) = cos(theta)/(p sin(theta)) phi-hat
//! + grad chi. Throws StringProximityError within eps_string of the +-z axis.
GaugePotentialSample gauge_potential(const GaugeSpec &gauge, double p,
                                     double theta, double phi,
                                     double eps_string = kDefaultStringEps);

enum class Pole { North, South };

//! Loop integral of a^(chi) around the z axis at polar angle eps (north) or
//! pi - eps (south), Richardson-extrapolated eps -> 0, in units of 2 pi.
//! Right-handed orientation about +z. North string carries 1 - m, south
//! -(1 + m).
double string_flux(const GaugeSpec &gauge, double p, Pole pole,
                   double eps0 = 1e-3, int n_phi = 64);

struct CurlCheck {
  Vec3 computed_curl{};
  Vec3 expected{}; // monopole field -p_hat / p^2
  double relative_error = 0.0;
};

//! Central-difference curl of a^(chi) against the monopole field -p_hat/p^2.
//! The monopole sign follows from the string-flux orientation convention.
CurlCheck monopole_curl_check(const GaugeSpec &gauge, double p, double theta,
                              double phi, double step,
                              double eps_string = kDefaultStringEps);

//------------------------------------------------------------------------------
struct AngularMomentumDecomposition {
  int m = 0;
  int lambda = +1;
  double theta = 0.0;
  struct Row {
    int s_z;       // = mu
    int l_z;       // = m - mu
    cplx amplitude;
    double probability;
  };
  std::array<Row, 3> rows{}; // ordered mu = -1, 0, +1
};

//! Spin/orbital decomposition of the basis vector in the chi = -m phi gauge,
//! evaluated along phi = 0. For lambda = -1 the amplitudes follow from the
//! conjugation identity D_{mu,lambda} = conj(D_{-mu,-lambda}); the table is
//! reported in the lambda = +1 normal form (the physical s_z, l_z, j_z of the
//! lambda = -1 vector are the negatives of the printed labels).
AngularMomentumDecomposition sz_lz_decomposition(int m, int lambda,
                                                 double theta);

struct BasisExpectations {
  double s_z = 0.0; // cos(theta)
  double l_z = 0.0; // m - cos(theta)
  double j_z = 0.0; // m
};

//! Weighted sums over the decomposition rows.
BasisExpectations basis_expectations(int m, int lambda, double theta);

//------------------------------------------------------------------------------
//! Compensating phase T = exp(-i lambda (chi' - chi)) with |T| = 1, such that
//! e^(chi') = T e^(chi).
cplx gauge_transform_phase(const GaugeSpec &gauge_from,
                           const GaugeSpec &gauge_to, int lambda, double theta,
                           double phi);

} // namespace pgk
