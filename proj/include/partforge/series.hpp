#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "partforge/divisors.hpp"
#include "partforge/triple.hpp"

namespace partforge {

/// How values[n] relates to the formal power series F(z).
enum class CoeffKind {
  EgfNumerator,  ///< values[n] = n! [z^n] F(z)
  Ogf,           ///< values[n] = [z^n] F(z)
};

/// Exact coefficients of P(z) or Q(z) for indices 0..N.
struct CoeffSequence {
  AdmissibleTriple triple;
  Form form;
  CoeffKind kind;
  std::vector<mpz_class> values;

  std::size_t size() const { return values.size(); }
  const mpz_class& operator[](std::size_t n) const { return values[n]; }
};

/// Exact coefficients n! [z^n] of the weighted series P^(z, v).
struct WeightedSequence {
  AdmissibleTriple triple;
  mpq_class v;
  std::vector<mpq_class> values;
};

/// p_0..p_N with p_n = n! [z^n] F(z), F = P or Q, from the cyclic Euler
/// transform F = exp(sum_L W(L) z^L / L):
///
///   p_m = sum_{k=1..m} W(k) (m-1)!/(m-k)! p_{m-k},   p_0 = 1.
///
/// Works for every admissible triple; all arithmetic is integral.
CoeffSequence egf_coeffs(const AdmissibleTriple& triple, Form form, std::size_t max_index);
CoeffSequence egf_coeffs(const WeightKernel& kernel, Form form, std::size_t max_index);

/// Same recurrence with the weights W_v(L) = sum_{d|L} v^{L/d+1} chi(d), in
/// exact rationals. v = 1 reproduces P and v = -1 reproduces Q.
WeightedSequence egf_coeffs_weighted(const AdmissibleTriple& triple, const mpq_class& v,
                                     std::size_t max_index);

/// Ordinary coefficients [z^n] F(z) for j = 0, where F is the Euler transform
/// of psi. Uses n F_n = sum_{k=1..n} c_k F_{n-k} with c_k = sum_{d|k} d psi(d)
/// (alternating in k/d for Q). Throws std::invalid_argument for j > 0.
CoeffSequence ogf_coeffs_euler(const AdmissibleTriple& triple, Form form, std::size_t max_index);

/// Core of egf_coeffs: p_0..p_N from the log-series weights W(1..N)
/// (weights[0] is ignored).
std::vector<mpz_class> exponential_recurrence(const std::vector<mpz_class>& weights,
                                              std::size_t max_index);

/// Natural log of a positive big integer; throws std::domain_error otherwise.
double log_of(const mpz_class& value);

/// log [z^n] F(z) for either kind of sequence.
double log_coefficient(const CoeffSequence& seq, std::size_t n);

}  // namespace partforge
