#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "partforge/triple.hpp"

// Brute-force counters that cross-check the recurrences in series.hpp. They
// rebuild the per-degree exponents of the product directly from its index
// tuples and never call into the divisor kernel.
namespace partforge::oracle {

inline constexpr std::size_t kCycleTypeBound = 40;
inline constexpr std::size_t kProductBound = 200;

/// Cycle-index weight of one degree m, read straight off the product: the
/// sum over ordered tuples (n_1..n_i, d_1..d_j, e_1..e_k) with product m of
/// (n_1..n_i)^2 (e_1..e_k).
mpz_class enumerated_chi(const AdmissibleTriple& triple, std::uint64_t m);

/// Ordinary Euler exponent of degree m for j = 0: the sum over tuples
/// (n_1..n_i, e_1..e_k) with product m of n_1..n_i.
mpz_class enumerated_psi(const AdmissibleTriple& triple, std::uint64_t m);

/// n! [z^n] exp(sum_L W(L) z^L / L) summed over the cycle types of S_n:
/// sum_{lambda |- n} (n!/z_lambda) prod_i W(lambda_i). Throws
/// std::out_of_range when n exceeds `bound`.
mpz_class cycle_type_sum(const AdmissibleTriple& triple, Form form, std::size_t n,
                         std::size_t bound = kCycleTypeBound);

/// [z^0..z^N] of the truncated product prod_m (1 - z^m)^{-psi(m)} (P) or
/// prod_m (1 + z^m)^{psi(m)} (Q), one factor at a time. j = 0 only.
std::vector<mpz_class> product_expand(const AdmissibleTriple& triple, Form form,
                                      std::size_t max_index, std::size_t bound = kProductBound);

}  // namespace partforge::oracle
