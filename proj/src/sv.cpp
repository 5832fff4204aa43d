#include "longmem/sv.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "longmem/quadrature.hpp"

namespace longmem {

namespace {

void require_domain(double x, const char* who) {
  if (!(x > 0.0) || x > kPi) {
    std::ostringstream msg;
    msg << who << ": argument " << x << " outside (0, pi]";
    throw std::domain_error(msg.str());
  }
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

Envelope Envelope::power(double c, double beta) {
  if (c < 0.0 || !(beta > 0.0)) {
    throw std::invalid_argument("Envelope::power: need c >= 0 and beta > 0");
  }
  Envelope env;
  env.kind_ = EnvelopeKind::power;
  env.a_ = c;
  env.b_ = beta;
  env.rv_index_ = beta;
  return env;
}

Envelope Envelope::log_inverse(double rho, double offset) {
  if (!(rho > 0.0) || offset < 0.0) {
    throw std::invalid_argument(
        "Envelope::log_inverse: need rho > 0 and offset >= 0");
  }
  Envelope env;
  env.kind_ = EnvelopeKind::log_inverse;
  env.a_ = rho;
  env.b_ = offset;
  env.rv_index_ = 0.0;
  return env;
}

Envelope Envelope::loglog_inverse() {
  Envelope env;
  env.kind_ = EnvelopeKind::loglog_inverse;
  env.rv_index_ = 0.0;
  return env;
}

Envelope Envelope::custom(std::function<double(double)> eval, double rv_index,
                          std::string label) {
  if (!eval) throw std::invalid_argument("Envelope::custom: empty function");
  Envelope env;
  env.kind_ = EnvelopeKind::custom;
  env.rv_index_ = rv_index;
  env.fn_ = std::move(eval);
  env.label_ = std::move(label);
  return env;
}

double Envelope::operator()(double s) const {
  require_domain(s, "Envelope");
  switch (kind_) {
    case EnvelopeKind::power:
      return a_ * std::pow(s, b_);
    case EnvelopeKind::log_inverse:
      return a_ / std::max(1.0, b_ + std::log(1.0 / s));
    case EnvelopeKind::loglog_inverse: {
      const double w = std::max(std::log(1.0 / s), std::numbers::e);
      return 1.0 / (w * std::log(w));
    }
    case EnvelopeKind::custom:
      return fn_(s);
  }
  return 0.0;
}

std::string Envelope::describe() const {
  switch (kind_) {
    case EnvelopeKind::power:
      return "envelope=power c=" + format_value(a_) +
             " beta=" + format_value(b_);
    case EnvelopeKind::log_inverse:
      return "envelope=log_inverse rho=" + format_value(a_) +
             " offset=" + format_value(b_);
    case EnvelopeKind::loglog_inverse:
      return "envelope=loglog_inverse";
    case EnvelopeKind::custom:
      return "envelope=custom label=" + label_;
  }
  return "envelope=?";
}

EtaFunction::EtaFunction(std::function<double(double)> fn, Envelope envelope,
                         std::string label)
    : fn_(std::move(fn)), envelope_(std::move(envelope)),
      label_(std::move(label)) {
  if (!fn_) throw std::invalid_argument("EtaFunction: empty function");
}

EtaFunction EtaFunction::zero(Envelope envelope) {
  return EtaFunction([](double) { return 0.0; }, std::move(envelope), "zero");
}

EtaFunction EtaFunction::scaled(Envelope envelope, double theta) {
  Envelope env = envelope;
  return EtaFunction([env, theta](double s) { return theta * env(s); },
                     std::move(envelope),
                     "scaled theta=" + format_value(theta));
}

EtaFunction EtaFunction::step(Envelope envelope, double cutoff) {
  require_domain(cutoff, "EtaFunction::step");
  const double level = envelope(cutoff);
  return EtaFunction(
      [level, cutoff](double s) { return s > cutoff ? level : 0.0; },
      std::move(envelope), "step cutoff=" + format_value(cutoff));
}

MembershipReport verify_membership(const EtaFunction& eta,
                                   std::size_t grid_size) {
  if (grid_size < 2) {
    throw std::invalid_argument("verify_membership: grid_size < 2");
  }
  MembershipReport report;
  report.grid_size = grid_size;
  const double lo = std::log(1e-12);
  const double hi = std::log(kPi);
  for (std::size_t i = 0; i < grid_size; ++i) {
    double s = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(grid_size - 1));
    if (std::abs(s - 1.0) < 1e-9) s *= 1.0 + 1e-8;  // grids avoid s = 1
    const double bound = eta.envelope()(s);
    const double value = eta(s);
    if (std::abs(value) > bound + 1e-12 * (1.0 + bound)) {
      report.ok = false;
      report.violations.push_back({s, value, bound});
    }
  }
  return report;
}

SlowlyVaryingL::SlowlyVaryingL(EtaFunction eta, double value_at_anchor,
                               double anchor)
    : eta_(std::move(eta)), value_at_anchor_(value_at_anchor),
      anchor_(anchor) {
  if (!(value_at_anchor > 0.0)) {
    throw std::invalid_argument("SlowlyVaryingL: anchor value must be > 0");
  }
  require_domain(anchor, "SlowlyVaryingL anchor");
}

SlowlyVaryingL SlowlyVaryingL::from_eta(EtaFunction eta,
                                        double value_at_anchor,
                                        double anchor) {
  SlowlyVaryingL L(std::move(eta), value_at_anchor, anchor);
  L.label_ = "L=from_eta " + L.eta_.label();
  return L;
}

SlowlyVaryingL SlowlyVaryingL::constant(double value) {
  SlowlyVaryingL L(EtaFunction::zero(Envelope::power(0.0, 1.0)), value, kPi);
  L.closed_log_ = [value](double) { return std::log(value); };
  L.label_ = "L=constant value=" + format_value(value);
  return L;
}

SlowlyVaryingL SlowlyVaryingL::power_kind(double c, double beta,
                                          double value_at_pi) {
  Envelope env = Envelope::power(std::abs(c), beta);
  EtaFunction eta([c, beta](double s) { return c * std::pow(s, beta); }, env,
                  "power member");
  SlowlyVaryingL L(std::move(eta), value_at_pi, kPi);
  const double log_av = std::log(value_at_pi);
  L.closed_log_ = [c, beta, log_av](double x) {
    return log_av - c * (std::pow(kPi, beta) - std::pow(x, beta)) / beta;
  };
  L.label_ = "L=power c=" + format_value(c) + " beta=" + format_value(beta);
  return L;
}

SlowlyVaryingL SlowlyVaryingL::log_kind(double rho, double offset,
                                        double value_at_pi) {
  Envelope env = Envelope::log_inverse(std::abs(rho), offset);
  auto w = [offset](double s) {
    return std::max(1.0, offset + std::log(1.0 / s));
  };
  EtaFunction eta(
      [rho, w](double s) {
        const double ws = w(s);
        return ws > 1.0 ? -rho / ws : 0.0;
      },
      env, "log member");
  SlowlyVaryingL L(std::move(eta), value_at_pi, kPi);
  const double log_av = std::log(value_at_pi);
  const double log_w_pi = std::log(w(kPi));
  L.closed_log_ = [rho, w, log_av, log_w_pi](double x) {
    return log_av + rho * (std::log(w(x)) - log_w_pi);
  };
  L.label_ = "L=log rho=" + format_value(rho) +
             " offset=" + format_value(offset);
  return L;
}

SlowlyVaryingL SlowlyVaryingL::loglog_kind(double rho, double value_at_pi) {
  Envelope env = Envelope::loglog_inverse();
  auto w = [](double s) {
    return std::max(std::log(1.0 / s), std::numbers::e);
  };
  EtaFunction eta(
      [rho, w](double s) {
        const double ws = w(s);
        return ws > std::numbers::e ? -rho / (ws * std::log(ws)) : 0.0;
      },
      env, "loglog member");
  SlowlyVaryingL L(std::move(eta), value_at_pi, kPi);
  const double log_av = std::log(value_at_pi);
  const double loglog_w_pi = std::log(std::log(w(kPi)));
  L.closed_log_ = [rho, w, log_av, loglog_w_pi](double x) {
    return log_av + rho * (std::log(std::log(w(x))) - loglog_w_pi);
  };
  L.label_ = "L=loglog rho=" + format_value(rho);
  return L;
}

double SlowlyVaryingL::log_value(double x) const {
  require_domain(x, "SlowlyVaryingL");
  if (closed_log_) return closed_log_(x);
  double integral = 0.0;
  if (x < anchor_) {
    integral = quad::integrate_log(
        [this](double s) { return eta_(s) / s; }, x, anchor_);
  } else if (x > anchor_) {
    integral = -quad::integrate_log(
        [this](double s) { return eta_(s) / s; }, anchor_, x);
  }
  return std::log(value_at_anchor_) - integral;
}

double SlowlyVaryingL::operator()(double x) const {
  return std::exp(log_value(x));
}

double SlowlyVaryingL::value_by_quadrature(double x) const {
  require_domain(x, "SlowlyVaryingL");
  double integral = 0.0;
  if (x < anchor_) {
    integral = quad::integrate_log(
        [this](double s) { return eta_(s) / s; }, x, anchor_);
  } else if (x > anchor_) {
    integral = -quad::integrate_log(
        [this](double s) { return eta_(s) / s; }, anchor_, x);
  }
  return value_at_anchor_ * std::exp(-integral);
}

HPair h_and_h_star(const EtaFunction& eta, double x, double upper) {
  require_domain(x, "h_and_h_star");
  require_domain(upper, "h_and_h_star upper");
  HPair out{0.0, 0.0};
  if (x < upper) {
    out.h = -quad::integrate_log([&eta](double s) { return eta(s) / s; }, x,
                                 upper);
    const Envelope& env = eta.envelope();
    out.h_star =
        quad::integrate_log([&env](double s) { return env(s) / s; }, x, upper);
  }
  return out;
}

double h_star(const Envelope& envelope, double x, double upper) {
  require_domain(x, "h_star");
  if (x >= upper) return 0.0;
  return quad::integrate_log(
      [&envelope](double s) { return envelope(s) / s; }, x, upper);
}

}  // namespace longmem
