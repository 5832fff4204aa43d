#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace longmem {

inline constexpr double kPi = std::numbers::pi;

// Offset used by the log-family envelopes and slowly varying factors,
// w(s) = offset + log(1/s). A positive offset keeps the factor finite and
// positive on all of (0, pi] and puts moderate sample sizes (n ~ 1e4..1e6)
// into the regime where the first-order asymptotic formulas are accurate.
inline constexpr double kDefaultLogOffset = 5.0;

enum class EnvelopeKind { power, log_inverse, loglog_inverse, custom };

// Non-decreasing envelope eta*(s) on (0, pi] with eta*(0+) = 0, regularly
// varying at 0 with index rv_index >= 0. Members of the class are the
// measurable eta with |eta| <= eta*.
class Envelope {
 public:
  // eta*(s) = c * s^beta
  static Envelope power(double c, double beta);
  // eta*(s) = rho / max(1, offset + log(1/s))
  static Envelope log_inverse(double rho, double offset = kDefaultLogOffset);
  // eta*(s) = 1 / (w log w), w = max(log(1/s), e)
  static Envelope loglog_inverse();
  static Envelope custom(std::function<double(double)> eval, double rv_index,
                         std::string label);

  double operator()(double s) const;
  EnvelopeKind kind() const { return kind_; }
  double rv_index() const { return rv_index_; }
  // key=value record for configs and provenance headers
  std::string describe() const;

  double param_c() const { return a_; }
  double param_beta() const { return b_; }
  double param_rho() const { return a_; }
  double param_offset() const { return b_; }

 private:
  Envelope() = default;
  EnvelopeKind kind_ = EnvelopeKind::custom;
  double a_ = 0.0, b_ = 0.0;  // (c, beta) or (rho, offset)
  double rv_index_ = 0.0;
  std::function<double(double)> fn_;
  std::string label_;
};

// A member eta of SV(eta*): |eta| <= eta* is the membership condition
// (checked by verify_membership, not enforced at construction).
class EtaFunction {
 public:
  EtaFunction(std::function<double(double)> fn, Envelope envelope,
              std::string label = {});

  static EtaFunction zero(Envelope envelope);
  // eta = theta * eta*, |theta| <= 1 for a member
  static EtaFunction scaled(Envelope envelope, double theta);
  // eta(s) = eta*(cutoff) for s > cutoff, 0 below (the two-point
  // construction's step member)
  static EtaFunction step(Envelope envelope, double cutoff);

  double operator()(double s) const { return fn_(s); }
  const Envelope& envelope() const { return envelope_; }
  const std::string& label() const { return label_; }

 private:
  std::function<double(double)> fn_;
  Envelope envelope_;
  std::string label_;
};

struct MembershipViolation {
  double s;
  double eta;
  double bound;
};

struct MembershipReport {
  bool ok = true;
  std::size_t grid_size = 0;
  std::vector<MembershipViolation> violations;
};

// Checks |eta| <= eta* on a log-spaced grid over [1e-12, pi]. The grid skips
// s = 1 (nodes landing there are nudged).
MembershipReport verify_membership(const EtaFunction& eta,
                                   std::size_t grid_size = 512);

// L(x) = value_at_anchor * exp(-int_x^anchor eta(s)/s ds). The anchor
// defaults to pi; closed-form factories also attach an analytic log L so that
// quadrature and formula can be cross-checked.
class SlowlyVaryingL {
 public:
  static SlowlyVaryingL from_eta(EtaFunction eta, double value_at_anchor = 1.0,
                                 double anchor = kPi);
  static SlowlyVaryingL constant(double value = 1.0);
  // eta(s) = c s^beta,  L(x) = L(pi) exp(-c (pi^beta - x^beta)/beta)
  static SlowlyVaryingL power_kind(double c, double beta,
                                   double value_at_pi = 1.0);
  // L(x) = L(pi) * (w(x)/w(pi))^rho, w(s) = max(1, offset + log(1/s));
  // rho > 0 grows like log^rho(1/x), rho < 0 decays like log^-|rho|(1/x)
  static SlowlyVaryingL log_kind(double rho,
                                 double offset = kDefaultLogOffset,
                                 double value_at_pi = 1.0);
  // L(x) = L(pi) * (log w(x) / log w(pi))^rho, w(s) = max(log(1/s), e)
  static SlowlyVaryingL loglog_kind(double rho = 1.0,
                                    double value_at_pi = 1.0);

  double operator()(double x) const;
  double log_value(double x) const;
  // always evaluates the representation integral, ignoring any closed form
  double value_by_quadrature(double x) const;
  bool has_closed_form() const { return static_cast<bool>(closed_log_); }

  const EtaFunction& eta() const { return eta_; }
  double anchor() const { return anchor_; }
  double value_at_anchor() const { return value_at_anchor_; }
  const std::string& describe() const { return label_; }

 private:
  SlowlyVaryingL(EtaFunction eta, double value_at_anchor, double anchor);
  EtaFunction eta_;
  double value_at_anchor_;
  double anchor_;
  std::function<double(double)> closed_log_;  // log L(x) when analytic
  std::string label_;
};

struct HPair {
  double h;       // -int_x^upper eta(s)/s ds
  double h_star;  //  int_x^upper eta*(s)/s ds
};

HPair h_and_h_star(const EtaFunction& eta, double x, double upper = kPi);
double h_star(const Envelope& envelope, double x, double upper = kPi);

}  // namespace longmem
