#pragma once
#include <functional>
#include <vector>

namespace pgk {

//==============================================================================
// Gauss-Legendre nodes/weights on [-1, 1].

struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};

// Nodes in increasing order, computed by Newton iteration to ~1e-15.
GaussLegendre gauss_legendre(int n);

//==============================================================================
// Adaptive Gauss-Kronrod (G7/K15) integration.

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int panels = 0;
};

// Integrates f over [a, b], bisecting until the summed K15-G7 error estimate
// drops below max(abs_tol, rel_tol*|value|). Panel results are accumulated in
// long double to keep cancellation between oscillatory panels benign.
QuadResult integrate_adaptive(const std::function<double(double)> &f, double a,
                              double b, double abs_tol, double rel_tol,
                              int max_panels = 4000);

// Same, but the caller supplies an initial partition (breakpoints must be
// increasing and bracket the domain). Used for oscillatory integrands.
QuadResult integrate_adaptive(const std::function<double(double)> &f,
                              const std::vector<double> &breakpoints,
                              double abs_tol, double rel_tol,
                              int max_panels = 4000);

} // namespace pgk
