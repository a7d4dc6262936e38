#include "pgk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pgk {

//==============================================================================

GaussLegendre gauss_legendre(int n) {
  if (n < 1)
    throw std::invalid_argument("gauss_legendre: order must be >= 1");
  GaussLegendre gl;
  gl.x.resize(n);
  gl.w.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th root (descending).
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16)
        break;
    }
    gl.x[i] = -z;
    gl.x[n - 1 - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    gl.w[i] = w;
    gl.w[n - 1 - i] = w;
  }
  return gl;
}

//==============================================================================
// G7/K15 nodes and weights (positive half; symmetric).

namespace {

constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct PanelEval {
  double k15;
  double err;
};

PanelEval gk15(const std::function<double(double)> &f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double res_g = kWg[3] * fc;
  double res_k = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    res_k += kWgk[j] * fsum;
    if (j % 2 == 1)
      res_g += kWg[j / 2] * fsum;
  }
  res_g *= h;
  res_k *= h;
  return {res_k, std::abs(res_k - res_g)};
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)> &f,
                              const std::vector<double> &breakpoints,
                              double abs_tol, double rel_tol, int max_panels) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("integrate_adaptive: need >= 2 breakpoints");

  struct Panel {
    double a, b, value, err;
  };
  std::vector<Panel> panels;
  panels.reserve(breakpoints.size() - 1);
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    auto e = gk15(f, breakpoints[i], breakpoints[i + 1]);
    panels.push_back({breakpoints[i], breakpoints[i + 1], e.k15, e.err});
  }

  auto totals = [&panels]() {
    long double v = 0.0L, e = 0.0L;
    for (const auto &p : panels) {
      v += p.value;
      e += p.err;
    }
    return std::pair<double, double>{double(v), double(e)};
  };

  while (true) {
    auto [value, err] = totals();
    const double tol = std::max(abs_tol, rel_tol * std::abs(value));
    if (err <= tol)
      return {value, err, true, int(panels.size())};
    if (int(panels.size()) >= max_panels)
      return {value, err, false, int(panels.size())};
    // Bisect the worst panel.
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i)
      if (panels[i].err > panels[worst].err)
        worst = i;
    Panel p = panels[worst];
    const double m = 0.5 * (p.a + p.b);
    auto e1 = gk15(f, p.a, m);
    auto e2 = gk15(f, m, p.b);
    panels[worst] = {p.a, m, e1.k15, e1.err};
    panels.push_back({m, p.b, e2.k15, e2.err});
  }
}

QuadResult integrate_adaptive(const std::function<double(double)> &f, double a,
                              double b, double abs_tol, double rel_tol,
                              int max_panels) {
  return integrate_adaptive(f, std::vector<double>{a, b}, abs_tol, rel_tol,
                            max_panels);
}

} // namespace pgk
