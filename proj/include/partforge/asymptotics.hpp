#pragma once

#include <string>

#include "partforge/triple.hpp"

namespace partforge {

/// A coefficient index n held through log n, so that indices like 10^(10^5)
/// stay representable.
class LogIndex {
 public:
  static LogIndex from_n(double n);
  static LogIndex from_log(double log_n);
  static LogIndex from_log10(double log10_n);

  double log() const { return log_n_; }
  /// n itself; +inf when it does not fit in a double.
  double value() const;

 private:
  explicit LogIndex(double log_n) : log_n_(log_n) {}
  double log_n_;
};

/// Weak saddle point exponent alpha(n), r = exp(-exp(alpha(n))), obtained from
/// the leading residue term only. Seven branches selected by (i, k, j, form).
/// Signed constants enter through their sign-simplified magnitudes; throws
/// std::domain_error if that simplification does not yield a positive value.
double weak_saddle_alpha(const AdmissibleTriple& triple, Form form, LogIndex n);

/// First-order growth of log [z^n] F(z):
///   i >= 1:         (3/2) (2|A|/3^(i-1))^(1/3) (log n)^((i-1)/3) n^(2/3)
///   i = 0, k >= 1:  2 (|B|/2^(k-1))^(1/2) (log n)^((k-1)/2) n^(1/2)
///   i = k = 0:      |C| (log n)^(j+1) for P, |D| (log n)^j for Q
/// Requires n > 1.
double log_coeff_asymptotic(const AdmissibleTriple& triple, Form form, LogIndex n);

enum class Capability { LogOnly, FullCoefficient };

struct AsymptoticModel {
  AdmissibleTriple triple;
  Form form;
  Capability capability;
  /// The saddle point equation reduces to a polynomial of degree <= 3 in
  /// -log r and can be solved explicitly.
  bool solvable;
  std::string note;
};

AsymptoticModel model_for(const AdmissibleTriple& triple, Form form);

/// Natural log of a coefficient estimate, with a mantissa x 10^exponent view.
struct CoeffEstimate {
  double log_value;

  double log10_value() const;
  /// e.g. "1.9930e+08"
  std::string scientific(int digits = 4) const;
};

/// Closed-form estimate of [z^n] F(z) (for (0,1,0) P this is p_n/n!).
/// Available for P (0,0,1), P (0,1,0), Q (0,0,1), Q (0,1,0), Q (0,2,0);
/// throws std::domain_error ("no closed form") for anything else. n >= 2.
CoeffEstimate coeff_asymptotic(const AdmissibleTriple& triple, Form form, LogIndex n);

/// Partition-number estimates e^{pi sqrt(2n/3)} / (4 sqrt(3) n) and, for
/// distinct parts, e^{pi sqrt(n/3)} / (4 3^(1/4) n^(3/4)).
CoeffEstimate hardy_ramanujan(Form form, LogIndex n);

/// (0,1,0) P estimate of p_n/n! with w_n = W(e^gamma n) and
/// c = pi^2/12 - gamma^2/2 - 2 gamma_1:
///   (w_n/n)^(1-gamma) / sqrt(2 pi |log(w_n/n)|) * exp(c + w_n + log^2(w_n/n)/2)
CoeffEstimate p010_estimate(LogIndex n);

/// Alternative form of the same estimate in which the prefactor uses
/// log(e^gamma n)/n in place of w_n/n:
///   e^(c+gamma) exp(log^2(w_n/n)/2) / (sqrt(2 pi) L^gamma sqrt(|log L|)),
///   L = log(e^gamma n)/n.
CoeffEstimate p010_estimate_log_radius(LogIndex n);

/// w_n^2 / log^2 n with w_n = W(e^gamma n).
double kotesovec_ratio(LogIndex n);

/// The conjectured growth (log 2 / 2) log^2 n for log(p_n/n!), (0,1,0) P.
double kotesovec_conjectured_log(LogIndex n);

}  // namespace partforge
