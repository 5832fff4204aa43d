#pragma once

#include <functional>

namespace longmem::quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 50000;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a, b]. Panels are bisected worst-first
// until the accumulated error estimate satisfies
//   err <= max(rel_tol*|value|, abs_tol).
// Throws QuadratureError when the panel budget runs out first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

// Same integral evaluated after the substitution u = log s; intended for
// integrands with a 1/s factor or steep variation toward 0. Requires
// 0 < a < b.
double integrate_log(const std::function<double(double)>& f, double a,
                     double b, const Options& opts = {});

// Integral over (0, b] of an integrand with an integrable power-type
// singularity at 0. `decay` must be a positive lower bound on the exponent of
// x*f(x) near 0 (for f ~ x^-alpha pass 1-alpha); it controls how far the
// log-substituted domain is extended toward 0.
double integrate_singular0(const std::function<double(double)>& f, double b,
                           double decay, const Options& opts = {});

// Splits [a, b] into half-period panels of cos(k x) before integrating, so
// the panel rule never sees more than one sign change of the oscillation.
double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double k, const Options& opts = {});

}  // namespace longmem::quad
