#include "partforge/oracle.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace partforge::oracle {

namespace {

enum class Slot { Numerator, Denominator, Extra };

// Sums prod weight(slot, factor) over every ordered factorisation of m into
// one factor per slot.
mpz_class sum_over_factorisations(const std::vector<Slot>& slots, std::uint64_t m,
                                  const std::function<mpz_class(Slot, std::uint64_t)>& weight) {
  std::function<mpz_class(std::size_t, std::uint64_t)> visit =
      [&](std::size_t slot, std::uint64_t remaining) -> mpz_class {
    if (slot + 1 == slots.size()) return weight(slots[slot], remaining);
    mpz_class total = 0;
    for (std::uint64_t f = 1; f <= remaining; ++f) {
      if (remaining % f != 0) continue;
      total += weight(slots[slot], f) * visit(slot + 1, remaining / f);
    }
    return total;
  };
  return visit(0, m);
}

std::vector<Slot> slots_for(const AdmissibleTriple& triple, bool with_denominators) {
  std::vector<Slot> slots;
  slots.insert(slots.end(), triple.i(), Slot::Numerator);
  if (with_denominators) slots.insert(slots.end(), triple.j(), Slot::Denominator);
  slots.insert(slots.end(), triple.k(), Slot::Extra);
  return slots;
}

mpz_class brute_cycle_weight(const AdmissibleTriple& triple, Form form, std::uint64_t length) {
  mpz_class total = 0;
  for (std::uint64_t d = 1; d <= length; ++d) {
    if (length % d != 0) continue;
    const mpz_class term = enumerated_chi(triple, d);
    if (form == Form::Q && (length / d) % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

}  // namespace

mpz_class enumerated_chi(const AdmissibleTriple& triple, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("enumerated_chi: m must be positive");
  return sum_over_factorisations(slots_for(triple, true), m,
                                 [](Slot slot, std::uint64_t f) -> mpz_class {
                                   switch (slot) {
                                     case Slot::Numerator: return mpz_class(f) * f;
                                     case Slot::Extra: return mpz_class(f);
                                     default: return mpz_class(1);
                                   }
                                 });
}

mpz_class enumerated_psi(const AdmissibleTriple& triple, std::uint64_t m) {
  if (triple.j() != 0) throw std::invalid_argument("enumerated_psi: requires j = 0");
  if (m == 0) throw std::invalid_argument("enumerated_psi: m must be positive");
  return sum_over_factorisations(slots_for(triple, false), m,
                                 [](Slot slot, std::uint64_t f) -> mpz_class {
                                   return slot == Slot::Numerator ? mpz_class(f) : mpz_class(1);
                                 });
}

mpz_class cycle_type_sum(const AdmissibleTriple& triple, Form form, std::size_t n,
                         std::size_t bound) {
  if (n > bound) {
    throw std::out_of_range("cycle_type_sum: n = " + std::to_string(n) +
                            " exceeds oracle bound " + std::to_string(bound));
  }
  if (n == 0) return 1;

  std::vector<mpz_class> weight(n + 1);
  for (std::size_t length = 1; length <= n; ++length) {
    weight[length] = brute_cycle_weight(triple, form, length);
  }
  mpz_class n_factorial;
  mpz_fac_ui(n_factorial.get_mpz_t(), n);

  // Parts are chosen in decreasing size; each level of the recursion fixes
  // the multiplicity c of one part size m and extends z_lambda by m^c c!.
  mpz_class total = 0;
  std::function<void(std::size_t, std::size_t, const mpz_class&, const mpz_class&)> visit =
      [&](std::size_t remaining, std::size_t max_part, const mpz_class& z_lambda,
          const mpz_class& product) {
        if (remaining == 0) {
          total += (n_factorial / z_lambda) * product;
          return;
        }
        for (std::size_t m = std::min(max_part, remaining); m >= 1; --m) {
          mpz_class z = z_lambda;
          mpz_class w = product;
          for (std::size_t c = 1; c * m <= remaining; ++c) {
            z *= m;
            z *= c;
            w *= weight[m];
            visit(remaining - c * m, m - 1, z, w);
          }
        }
      };
  visit(n, n, mpz_class(1), mpz_class(1));
  return total;
}

std::vector<mpz_class> product_expand(const AdmissibleTriple& triple, Form form,
                                      std::size_t max_index, std::size_t bound) {
  if (triple.j() != 0) throw std::invalid_argument("product_expand: requires j = 0");
  if (max_index > bound) {
    throw std::out_of_range("product_expand: N = " + std::to_string(max_index) +
                            " exceeds oracle bound " + std::to_string(bound));
  }
  std::vector<mpz_class> a(max_index + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= max_index; ++m) {
    const unsigned long repeats = enumerated_psi(triple, m).get_ui();
    for (unsigned long r = 0; r < repeats; ++r) {
      if (form == Form::P) {
        // times 1/(1 - z^m): running sum with stride m
        for (std::size_t idx = m; idx <= max_index; ++idx) a[idx] += a[idx - m];
      } else {
        // times (1 + z^m)
        for (std::size_t idx = max_index; idx >= m; --idx) a[idx] += a[idx - m];
      }
    }
  }
  return a;
}

}  // namespace partforge::oracle
