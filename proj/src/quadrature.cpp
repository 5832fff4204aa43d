#include "longmem/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "longmem/errors.hpp"

namespace longmem::quad {

namespace {

// Gauss(7)/Kronrod(15) abscissae and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kWk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double fs = f(c - dx) + f(c + dx);
    kronrod += kWk[i] * fs;
    if (i % 2 == 1) gauss += kWg[i / 2] * fs;
  }
  kronrod *= h;
  gauss *= h;
  double err = std::abs(kronrod - gauss);
  // standard QUADPACK-style error sharpening
  err = std::min(err, 200.0 * err * std::sqrt(std::max(err, 0.0) / 200.0));
  return {a, b, kronrod, err};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<Panel> panels;
  panels.reserve(64);
  panels.push_back(evaluate_panel(f, a, b));
  double value = panels[0].value;
  double error = panels[0].error;
  while (error > std::max(opts.rel_tol * std::abs(value), opts.abs_tol)) {
    if (static_cast<int>(panels.size()) >= opts.max_panels) {
      throw QuadratureError("adaptive quadrature: panel budget exhausted");
    }
    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& l, const Panel& r) { return l.error < r.error; });
    const Panel cur = *worst;
    if (cur.b - cur.a < 1e-15 * (b - a)) {
      throw QuadratureError(
          "adaptive quadrature: interval underflow before convergence");
    }
    const double mid = 0.5 * (cur.a + cur.b);
    const Panel left = evaluate_panel(f, cur.a, mid);
    const Panel right = evaluate_panel(f, mid, cur.b);
    *worst = left;
    panels.push_back(right);
    value += left.value + right.value - cur.value;
    error += left.error + right.error - cur.error;
    if (panels.size() % 64 == 0) {
      // re-accumulate to keep the running sums honest
      value = error = 0.0;
      for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
      }
    }
  }
  return sign * value;
}

double integrate_log(const std::function<double(double)>& f, double a,
                     double b, const Options& opts) {
  if (!(a > 0.0) || !(b > a)) {
    throw std::invalid_argument("integrate_log: requires 0 < a < b");
  }
  auto g = [&f](double u) {
    const double s = std::exp(u);
    return f(s) * s;
  };
  return integrate(g, std::log(a), std::log(b), opts);
}

double integrate_singular0(const std::function<double(double)>& f, double b,
                           double decay, const Options& opts) {
  if (!(b > 0.0)) throw std::invalid_argument("integrate_singular0: b <= 0");
  if (!(decay > 0.0)) {
    throw std::invalid_argument("integrate_singular0: decay must be > 0");
  }
  // After u = log x the integrand decays like exp(decay*u); run far enough
  // down that the truncated tail is negligible at the requested tolerance.
  const double span = (45.0 - std::log(std::max(opts.rel_tol, 1e-300))) /
                      decay;
  const double u_hi = std::log(b);
  const double u_lo = std::max(u_hi - span, -700.0);
  auto g = [&f](double u) {
    const double s = std::exp(u);
    return f(s) * s;
  };
  return integrate(g, u_lo, u_hi, opts);
}

double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double k, const Options& opts) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_oscillatory(f, b, a, k, opts);
  const double period = (k > 0.0) ? 3.14159265358979323846 / k : (b - a);
  if (b - a <= period) return integrate(f, a, b, opts);
  // sum over half-period panels; tolerance per panel is scaled by its share
  Options panel_opts = opts;
  const std::size_t count = static_cast<std::size_t>((b - a) / period) + 1;
  panel_opts.max_panels = std::max(64, opts.max_panels / static_cast<int>(count));
  double total = 0.0;
  double x = a;
  while (x < b) {
    const double next = std::min(x + period, b);
    panel_opts.abs_tol =
        std::max(opts.abs_tol, opts.rel_tol * std::abs(total) /
                                   static_cast<double>(count));
    total += integrate(f, x, next, panel_opts);
    x = next;
  }
  return total;
}

}  // namespace longmem::quad
