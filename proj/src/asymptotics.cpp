#include "partforge/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "partforge/constants.hpp"
#include "partforge/lambert_w.hpp"
#include "partforge/residue.hpp"

namespace partforge {

namespace {

using K = MathConstants;

double sign_pow(int exponent) { return exponent % 2 == 0 ? 1.0 : -1.0; }

// The leading constants alternate in sign exactly like the powers of log t
// they multiply near t = 0, so constant * (-1)^e must come out positive.
double positive_magnitude(double constant, int exponent, const char* what) {
  const double product = constant * sign_pow(exponent);
  if (!(product > 0.0)) {
    throw std::domain_error(std::string("sign simplification failed for ") + what);
  }
  return product;
}

// -c W(x) with log x supplied, the generic shape of the weak saddle branches.
double scaled_w(double c, double log_argument) { return -c * lambert_w_from_log(log_argument); }

void require_above_one(LogIndex n, const char* fn) {
  if (!(n.log() > 0.0)) throw std::domain_error(std::string(fn) + ": requires n > 1");
}

bool is(const AdmissibleTriple& t, unsigned i, unsigned j, unsigned k) {
  return t.i() == i && t.j() == j && t.k() == k;
}

}  // namespace

LogIndex LogIndex::from_n(double n) {
  if (!(n > 0.0)) throw std::domain_error("LogIndex: n must be positive");
  return LogIndex(std::log(n));
}

LogIndex LogIndex::from_log(double log_n) { return LogIndex(log_n); }

LogIndex LogIndex::from_log10(double log10_n) { return LogIndex(log10_n * std::log(10.0)); }

double LogIndex::value() const { return std::exp(log_n_); }

double weak_saddle_alpha(const AdmissibleTriple& t, Form form, LogIndex n) {
  require_above_one(n, "weak_saddle_alpha");
  const int i = static_cast<int>(t.i());
  const int j = static_cast<int>(t.j());
  const int k = static_cast<int>(t.k());
  const double log_n = n.log();

  if (i >= 1) {
    const double two_a = 2.0 * positive_magnitude(residue_leading(t, form, Pole::Two), i - 1, "A");
    if (i == 1) return -(log_n - std::log(two_a)) / 3.0;
    const double e = i - 1.0;
    return scaled_w(e / 3.0, std::log(3.0 / e) + (log_n - std::log(two_a)) / e);
  }
  if (k >= 1) {
    const double b = positive_magnitude(residue_leading(t, form, Pole::One), k - 1, "B");
    if (k == 1) return -(log_n - std::log(b)) / 2.0;
    const double e = k - 1.0;
    return scaled_w(e / 2.0, std::log(2.0 / e) + (log_n - std::log(b)) / e);
  }
  if (form == Form::P) {
    const double c = positive_magnitude(residue_leading(t, form, Pole::Zero), j + 1, "C");
    return scaled_w(j, -std::log(double(j)) + (log_n - std::log((j + 1) * c)) / j);
  }
  const double d = positive_magnitude(residue_leading(t, form, Pole::Zero), j, "D");
  if (j == 1) return std::log(d) - log_n;
  const double e = j - 1.0;
  return scaled_w(e, -std::log(e) + (log_n - std::log(j * d)) / e);
}

double log_coeff_asymptotic(const AdmissibleTriple& t, Form form, LogIndex n) {
  require_above_one(n, "log_coeff_asymptotic");
  const int i = static_cast<int>(t.i());
  const int j = static_cast<int>(t.j());
  const int k = static_cast<int>(t.k());
  const double log_n = n.log();
  const double log_log_n = std::log(log_n);

  double log_constant = 0.0;
  double log_log_power = 0.0;
  double log_n_power = 0.0;
  if (i >= 1) {
    // (2A / (-3)^(i-1))^(1/3)
    const double inner = 2.0 * residue_leading(t, form, Pole::Two) / std::pow(-3.0, i - 1);
    if (!(inner > 0.0)) throw std::domain_error("log_coeff_asymptotic: 2A/(-3)^(i-1) not positive");
    log_constant = std::log(1.5) + std::log(inner) / 3.0;
    log_log_power = (i - 1) / 3.0;
    log_n_power = 2.0 / 3.0;
  } else if (k >= 1) {
    const double inner = residue_leading(t, form, Pole::One) / std::pow(-2.0, k - 1);
    if (!(inner > 0.0)) throw std::domain_error("log_coeff_asymptotic: B/(-2)^(k-1) not positive");
    log_constant = std::log(2.0) + std::log(inner) / 2.0;
    log_log_power = (k - 1) / 2.0;
    log_n_power = 0.5;
  } else {
    const int e = form == Form::P ? j + 1 : j;
    const double inner = sign_pow(e) * residue_leading(t, form, Pole::Zero);
    if (!(inner > 0.0)) throw std::domain_error("log_coeff_asymptotic: signed C/D not positive");
    log_constant = std::log(inner);
    log_log_power = e;
  }
  return std::exp(log_constant + log_log_power * log_log_n + log_n_power * log_n);
}

AsymptoticModel model_for(const AdmissibleTriple& t, Form form) {
  const bool solvable = is(t, 1, 0, 0) || is(t, 1, 0, 1) || is(t, 0, 0, 1) || is(t, 0, 1, 0) ||
                        (form == Form::Q && is(t, 0, 2, 0));
  const bool closed = is(t, 0, 0, 1) || is(t, 0, 1, 0) || (form == Form::Q && is(t, 0, 2, 0));
  if (closed) return {t, form, Capability::FullCoefficient, true, "closed-form coefficient estimate"};
  if (solvable) {
    return {t, form, Capability::LogOnly, true,
            "saddle point solvable, no closed-form coefficient estimate implemented"};
  }
  return {t, form, Capability::LogOnly, false, "first-order log growth only"};
}

double CoeffEstimate::log10_value() const { return log_value / std::log(10.0); }

std::string CoeffEstimate::scientific(int digits) const {
  const double l10 = log10_value();
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  // rounding can push the mantissa to 10.000
  const double scale = std::pow(10.0, digits);
  if (std::round(mantissa * scale) >= 10.0 * scale) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fe%+03.0f", digits, mantissa, exponent);
  return buf;
}

CoeffEstimate hardy_ramanujan(Form form, LogIndex n) {
  const double log_n = n.log();
  const double sqrt_n = std::exp(0.5 * log_n);
  if (form == Form::P) {
    return {K::pi * std::sqrt(2.0 / 3.0) * sqrt_n - std::log(4.0 * std::sqrt(3.0)) - log_n};
  }
  return {K::pi * std::sqrt(1.0 / 3.0) * sqrt_n - std::log(4.0 * std::pow(3.0, 0.25)) -
          0.75 * log_n};
}

CoeffEstimate p010_estimate(LogIndex n) {
  const double c = residue_polynomial({0, 1, 0}, Form::P, Pole::Zero).coefficients[0];
  const double g = K::euler_gamma;
  const double w = lambert_w_from_log(g + n.log());
  const double log_u = std::log(w) - n.log();  // log(w_n / n) < 0
  return {(1.0 - g) * log_u - 0.5 * std::log(2.0 * K::pi * std::fabs(log_u)) + c + w +
          0.5 * log_u * log_u};
}

CoeffEstimate p010_estimate_log_radius(LogIndex n) {
  const double c = residue_polynomial({0, 1, 0}, Form::P, Pole::Zero).coefficients[0];
  const double g = K::euler_gamma;
  const double w = lambert_w_from_log(g + n.log());
  const double log_u = std::log(w) - n.log();
  const double log_l = std::log(g + n.log()) - n.log();
  return {c + g + 0.5 * log_u * log_u - 0.5 * std::log(2.0 * K::pi) - g * log_l -
          0.5 * std::log(std::fabs(log_l))};
}

CoeffEstimate coeff_asymptotic(const AdmissibleTriple& t, Form form, LogIndex n) {
  if (!(n.log() >= std::log(2.0))) throw std::domain_error("coeff_asymptotic: requires n >= 2");
  if (is(t, 0, 0, 1)) return hardy_ramanujan(form, n);
  if (form == Form::P && is(t, 0, 1, 0)) return p010_estimate(n);
  if (form == Form::Q && is(t, 0, 1, 0)) {
    const double g = K::euler_gamma;
    const double l2 = K::log2;
    // 2^(gamma - log2/2 + 1/2) / (sqrt(pi) (log 2)^(log2 - 1/2)) * n^(log2 - 1)
    const double log_constant = (g - l2 / 2.0 + 0.5) * l2 - 0.5 * std::log(K::pi) -
                                (l2 - 0.5) * std::log(l2);
    return {log_constant + (l2 - 1.0) * n.log()};
  }
  if (form == Form::Q && is(t, 0, 2, 0)) {
    const auto d = residue_polynomial(t, Form::Q, Pole::Zero).coefficients;
    const double d0 = d[0];
    const double d1 = d[1];
    const double d2 = d[2];
    // x = n e^{-d1/(2 d2)} / (2 d2); theta = (2 d2 / n) W(x), and the
    // prefactor uses the log approximation (2 d2 / n) log x of theta.
    const double log_x = n.log() - d1 / (2.0 * d2) - std::log(2.0 * d2);
    if (!(log_x > 0.0)) throw std::domain_error("coeff_asymptotic: (0,2,0) Q needs larger n");
    const double log_theta = std::log(2.0 * d2) - n.log() + std::log(lambert_w_from_log(log_x));
    const double log_theta_approx = std::log(2.0 * d2) - n.log() + std::log(log_x);
    return {d0 + d1 * log_theta + d2 * log_theta * log_theta - d1 -
            std::log(2.0 * std::sqrt(K::pi)) -
            0.5 * std::log(d2 * std::fabs(log_theta_approx)) +
            (1.0 - 2.0 * d2) * log_theta_approx};
  }
  throw std::domain_error("no closed form for " + t.to_string() + " " + to_string(form) +
                          ": use log_coeff_asymptotic");
}

double kotesovec_ratio(LogIndex n) {
  const double w = lambert_w_from_log(K::euler_gamma + n.log());
  return (w * w) / (n.log() * n.log());
}

double kotesovec_conjectured_log(LogIndex n) { return K::log2 / 2.0 * n.log() * n.log(); }

}  // namespace partforge
