#include "partforge/divisors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partforge {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("divisor-function value exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("divisor-function value exceeds 64 bits");
  }
  return out;
}

// C(a + k - 1, k - 1) evaluated as prod_{t=1..a} (k - 1 + t) / t; every
// partial product is itself a binomial coefficient, so each division is exact.
std::uint64_t stars_and_bars(unsigned a, unsigned k) {
  std::uint64_t result = 1;
  for (unsigned t = 1; t <= a; ++t) {
    result = checked_mul(result, k - 1 + t) / t;
  }
  return result;
}

mpq_class rational_pow(const mpq_class& base, unsigned long exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors_of: n must be positive");
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::uint64_t tau_k(unsigned k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("tau_k: n must be positive");
  if (k <= 1) return 1;
  std::uint64_t result = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) result = checked_mul(result, stars_and_bars(a, k));
  }
  if (n > 1) result = checked_mul(result, k);
  return result;
}

DivisorTable::DivisorTable(std::uint64_t limit) : limit_(limit) {
  // Two passes: count, then fill. Each d visits its multiples in increasing
  // order of d, so every row ends up sorted.
  std::vector<std::size_t> counts(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t m = d; m <= limit; m += d) ++counts[m];
  }
  offsets_.assign(limit + 2, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) offsets_[n + 1] = offsets_[n] + counts[n];
  values_.resize(offsets_[limit + 1]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t m = d; m <= limit; m += d) values_[cursor[m]++] = d;
  }
}

std::span<const std::uint64_t> DivisorTable::divisors(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw std::out_of_range("DivisorTable: " + std::to_string(n) + " outside [1, " +
                            std::to_string(limit_) + "]");
  }
  return {values_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
}

std::vector<std::uint64_t> DivisorTable::divisors_of(std::uint64_t n) const {
  if (n >= 1 && n <= limit_) {
    auto row = divisors(n);
    return {row.begin(), row.end()};
  }
  return partforge::divisors_of(n);
}

TauTable::TauTable(const DivisorTable& table, unsigned k)
    : k_(k), values_(table.limit() + 1, 1) {
  values_[0] = 0;
  // tau_{m+1}(n) = sum_{d|n} tau_m(n/d), starting from tau_1 = 1.
  for (unsigned m = 1; m < k; ++m) {
    std::vector<std::uint64_t> next(values_.size(), 0);
    for (std::uint64_t n = 1; n <= table.limit(); ++n) {
      std::uint64_t sum = 0;
      for (std::uint64_t d : table.divisors(n)) sum = checked_add(sum, values_[n / d]);
      next[n] = sum;
    }
    values_ = std::move(next);
  }
}

WeightKernel::WeightKernel(AdmissibleTriple triple, std::uint64_t limit)
    : triple_(triple), divisors_(limit) {
  taus_.emplace_back(divisors_, triple_.i());
  taus_.emplace_back(divisors_, triple_.j());
  taus_.emplace_back(divisors_, triple_.k());

  const unsigned i = triple_.i();
  const unsigned j = triple_.j();
  const unsigned k = triple_.k();
  enum { I, J, K };

  chi_.resize(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    mpz_class value = 0;
    if (i >= 1 && j == 0 && k == 0) {
      value = mpz_class(n) * n * tau(I, n);
    } else if (i >= 1 && j == 0) {
      for (std::uint64_t p : divisors_.divisors(n)) {
        value += mpz_class(p) * tau(I, p) * tau(K, n / p);
      }
      value *= n;
    } else if (i >= 1 && k == 0) {
      for (std::uint64_t p : divisors_.divisors(n)) {
        value += mpz_class(p) * p * tau(I, p) * tau(J, n / p);
      }
    } else if (i >= 1) {
      for (std::uint64_t p : divisors_.divisors(n)) {
        const mpz_class outer = mpz_class(p) * p * tau(I, p);
        for (std::uint64_t q : divisors_.divisors(n / p)) {
          value += outer * q * tau(K, q) * tau(J, n / (p * q));
        }
      }
    } else if (j == 0) {
      value = mpz_class(n) * tau(K, n);
    } else if (k >= 1) {
      for (std::uint64_t p : divisors_.divisors(n)) {
        value += mpz_class(p) * tau(K, p) * tau(J, n / p);
      }
    } else {
      value = tau(J, n);
    }
    chi_[n] = std::move(value);
  }
}

std::uint64_t WeightKernel::tau(unsigned which, std::uint64_t n) const {
  return taus_[which](n);
}

const mpz_class& WeightKernel::chi(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw std::out_of_range("chi: n outside kernel range");
  }
  return chi_[n];
}

mpz_class WeightKernel::psi(std::uint64_t n) const {
  if (triple_.j() != 0) {
    throw std::invalid_argument("psi is defined only for triples with j = 0, got " +
                                triple_.to_string());
  }
  if (n == 0 || n > limit()) throw std::out_of_range("psi: n outside kernel range");
  enum { I, J, K };
  if (triple_.k() == 0) return mpz_class(n) * tau(I, n);
  if (triple_.i() == 0) return mpz_class(tau(K, n));
  mpz_class value = 0;
  for (std::uint64_t p : divisors_.divisors(n)) {
    value += mpz_class(p) * tau(I, p) * tau(K, n / p);
  }
  return value;
}

mpz_class WeightKernel::cycle_weight(std::uint64_t length, Form form) const {
  mpz_class sum = 0;
  for (std::uint64_t d : divisors_.divisors(length)) {
    const std::uint64_t repeats = length / d;
    if (form == Form::Q && repeats % 2 == 0) {
      sum -= chi_[d];
    } else {
      sum += chi_[d];
    }
  }
  return sum;
}

mpq_class WeightKernel::cycle_weight(std::uint64_t length, const mpq_class& v) const {
  mpq_class sum = 0;
  for (std::uint64_t d : divisors_.divisors(length)) {
    sum += rational_pow(v, length / d + 1) * mpq_class(chi_[d]);
  }
  return sum;
}

std::vector<mpz_class> WeightKernel::cycle_weights(Form form) const {
  std::vector<mpz_class> out(limit() + 1, 0);
  for (std::uint64_t length = 1; length <= limit(); ++length) {
    out[length] = cycle_weight(length, form);
  }
  return out;
}

mpz_class chi(const AdmissibleTriple& triple, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("chi: n must be positive");
  return WeightKernel(triple, n).chi(n);
}

mpz_class psi(const AdmissibleTriple& triple, std::uint64_t n) {
  if (triple.j() != 0) {
    throw std::invalid_argument("psi is defined only for triples with j = 0, got " +
                                triple.to_string());
  }
  if (n == 0) throw std::invalid_argument("psi: n must be positive");
  return WeightKernel(triple, n).psi(n);
}

mpz_class cycle_weight(const AdmissibleTriple& triple, std::uint64_t length, Form form) {
  if (length == 0) throw std::invalid_argument("cycle_weight: length must be positive");
  return WeightKernel(triple, length).cycle_weight(length, form);
}

mpq_class cycle_weight(const AdmissibleTriple& triple, std::uint64_t length, const mpq_class& v) {
  if (length == 0) throw std::invalid_argument("cycle_weight: length must be positive");
  return WeightKernel(triple, length).cycle_weight(length, v);
}

}  // namespace partforge
