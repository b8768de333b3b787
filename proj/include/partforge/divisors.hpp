#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "partforge/triple.hpp"

namespace partforge {

/// Ordered divisors 1 = d_1 < ... < d_r = n by trial division. Throws
/// std::invalid_argument for n = 0.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

/// k-fold divisor function: the number of ordered k-tuples of positive
/// integers with product n. tau_0 and tau_1 are identically 1.
///
/// Evaluated from the prime factorization, tau_k(p^a) = C(a+k-1, k-1),
/// which is independent of the Dirichlet-convolution route used by TauTable.
std::uint64_t tau_k(unsigned k, std::uint64_t n);

/// Divisor lists for every n <= limit, built by a sieve and stored
/// contiguously. Immutable after construction.
class DivisorTable {
 public:
  explicit DivisorTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  /// Divisors of n for 1 <= n <= limit (strictly increasing).
  std::span<const std::uint64_t> divisors(std::uint64_t n) const;

  /// Same as divisors() inside the sieve range; trial division beyond it.
  std::vector<std::uint64_t> divisors_of(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint64_t> values_;
};

/// tau_k(n) for all n <= table.limit(), built by k-1 Dirichlet convolutions
/// with the constant-one function.
class TauTable {
 public:
  TauTable(const DivisorTable& table, unsigned k);

  unsigned k() const { return k_; }
  std::uint64_t operator()(std::uint64_t n) const { return values_.at(n); }

 private:
  unsigned k_;
  std::vector<std::uint64_t> values_;
};

/// Triple-dependent arithmetic weights for all n up to a fixed limit.
///
/// chi(n) drives the cyclic Euler transform (valid for every triple), psi(n)
/// the ordinary Euler transform (only for j = 0). The cycle weights are the
/// log-series coefficients W(L) = sum_{d|L} s(L/d) chi(d), with s = 1 for P,
/// s(l) = (-1)^{l+1} for Q and s(l) = v^{l+1} for the weighted family.
///
/// Everything is computed in the constructor; the object is read-only
/// afterwards and safe to share between threads.
class WeightKernel {
 public:
  WeightKernel(AdmissibleTriple triple, std::uint64_t limit);

  const AdmissibleTriple& triple() const { return triple_; }
  std::uint64_t limit() const { return divisors_.limit(); }
  const DivisorTable& divisors() const { return divisors_; }

  const mpz_class& chi(std::uint64_t n) const;
  mpz_class psi(std::uint64_t n) const;

  mpz_class cycle_weight(std::uint64_t length, Form form) const;
  mpq_class cycle_weight(std::uint64_t length, const mpq_class& v) const;

  /// W(1..limit) for the given form; index 0 holds 0.
  std::vector<mpz_class> cycle_weights(Form form) const;

 private:
  std::uint64_t tau(unsigned which, std::uint64_t n) const;

  AdmissibleTriple triple_;
  DivisorTable divisors_;
  std::vector<TauTable> taus_;
  std::vector<mpz_class> chi_;
};

/// Single-value conveniences; each builds a kernel sized to its argument.
mpz_class chi(const AdmissibleTriple& triple, std::uint64_t n);
/// Throws std::invalid_argument when triple.j() > 0.
mpz_class psi(const AdmissibleTriple& triple, std::uint64_t n);
mpz_class cycle_weight(const AdmissibleTriple& triple, std::uint64_t length, Form form);
mpq_class cycle_weight(const AdmissibleTriple& triple, std::uint64_t length, const mpq_class& v);

}  // namespace partforge
