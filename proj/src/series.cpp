#include "partforge/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace partforge {

std::vector<mpz_class> exponential_recurrence(const std::vector<mpz_class>& weights,
                                              std::size_t max_index) {
  if (weights.size() < max_index + 1) {
    throw std::invalid_argument("exponential_recurrence: need weights W(1..N)");
  }
  std::vector<mpz_class> p(max_index + 1);
  p[0] = 1;
  mpz_class acc;
  for (std::size_t m = 1; m <= max_index; ++m) {
    // Horner in the falling factorial: the k-th term carries the factors
    // (m-1)(m-2)...(m-k+1), so fold from k = m down to k = 1 multiplying by
    // (m-k) at each step.
    mpz_mul(acc.get_mpz_t(), weights[m].get_mpz_t(), p[0].get_mpz_t());
    for (std::size_t k = m - 1; k >= 1; --k) {
      mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), m - k);
      mpz_addmul(acc.get_mpz_t(), weights[k].get_mpz_t(), p[m - k].get_mpz_t());
    }
    p[m] = acc;
  }
  return p;
}

CoeffSequence egf_coeffs(const WeightKernel& kernel, Form form, std::size_t max_index) {
  if (kernel.limit() < max_index) {
    throw std::invalid_argument("egf_coeffs: kernel limit below requested index");
  }
  std::vector<mpz_class> weights = kernel.cycle_weights(form);
  weights.resize(std::max<std::size_t>(weights.size(), max_index + 1));
  return {kernel.triple(), form, CoeffKind::EgfNumerator,
          exponential_recurrence(weights, max_index)};
}

CoeffSequence egf_coeffs(const AdmissibleTriple& triple, Form form, std::size_t max_index) {
  WeightKernel kernel(triple, std::max<std::size_t>(max_index, 1));
  return egf_coeffs(kernel, form, max_index);
}

WeightedSequence egf_coeffs_weighted(const AdmissibleTriple& triple, const mpq_class& v,
                                     std::size_t max_index) {
  WeightKernel kernel(triple, std::max<std::size_t>(max_index, 1));
  std::vector<mpq_class> weights(max_index + 1);
  for (std::size_t length = 1; length <= max_index; ++length) {
    weights[length] = kernel.cycle_weight(length, v);
  }

  std::vector<mpq_class> p(max_index + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= max_index; ++m) {
    mpq_class acc = weights[m] * p[0];
    for (std::size_t k = m - 1; k >= 1; --k) {
      acc = acc * mpq_class(m - k) + weights[k] * p[m - k];
    }
    p[m] = acc;
  }
  mpq_class v_copy = v;
  v_copy.canonicalize();
  return {triple, v_copy, std::move(p)};
}

CoeffSequence ogf_coeffs_euler(const AdmissibleTriple& triple, Form form, std::size_t max_index) {
  if (triple.j() != 0) {
    throw std::invalid_argument("ordinary Euler transform requires j = 0, got " +
                                triple.to_string());
  }
  WeightKernel kernel(triple, std::max<std::size_t>(max_index, 1));
  const DivisorTable& table = kernel.divisors();

  std::vector<mpz_class> d_psi(max_index + 1);
  for (std::size_t d = 1; d <= max_index; ++d) d_psi[d] = kernel.psi(d) * d;

  std::vector<mpz_class> c(max_index + 1, 0);
  for (std::size_t k = 1; k <= max_index; ++k) {
    for (std::uint64_t d : table.divisors(k)) {
      if (form == Form::Q && (k / d) % 2 == 0) {
        c[k] -= d_psi[d];
      } else {
        c[k] += d_psi[d];
      }
    }
  }

  std::vector<mpz_class> f(max_index + 1);
  f[0] = 1;
  mpz_class acc;
  for (std::size_t n = 1; n <= max_index; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      mpz_addmul(acc.get_mpz_t(), c[k].get_mpz_t(), f[n - k].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n)) {
      throw std::logic_error("ogf_coeffs_euler: inexact division at n = " + std::to_string(n));
    }
    mpz_divexact_ui(f[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return {triple, form, CoeffKind::Ogf, std::move(f)};
}

double log_of(const mpz_class& value) {
  if (sgn(value) <= 0) throw std::domain_error("log_of: value must be positive");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double log_coefficient(const CoeffSequence& seq, std::size_t n) {
  const double log_value = log_of(seq.values.at(n));
  if (seq.kind == CoeffKind::Ogf) return log_value;
  return log_value - std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace partforge
