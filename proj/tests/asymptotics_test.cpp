#include <cmath>

#include "doctest.h"
#include "partforge/asymptotics.hpp"
#include "partforge/constants.hpp"
#include "partforge/format.hpp"
#include "partforge/lambert_w.hpp"
#include "partforge/series.hpp"

using namespace partforge;
using K = MathConstants;

namespace {

double ratio_exact_over_estimate(const CoeffSequence& seq, std::size_t n) {
  const LogIndex idx = LogIndex::from_n(static_cast<double>(n));
  return std::exp(log_coefficient(seq, n) - coeff_asymptotic(seq.triple, seq.form, idx).log_value);
}

}  // namespace

TEST_CASE("log index") {
  CHECK(LogIndex::from_n(1000).log() == doctest::Approx(std::log(1000.0)));
  CHECK(LogIndex::from_log10(3).value() == doctest::Approx(1000.0));
  CHECK(std::isinf(LogIndex::from_log10(1e5).value()));
  CHECK_THROWS_AS(LogIndex::from_n(0), std::domain_error);
}

TEST_CASE("weak saddle examples") {
  CHECK(weak_saddle_alpha(AdmissibleTriple(0, 0, 1), Form::P, LogIndex::from_n(100)) ==
        doctest::Approx(-0.5 * std::log(600 / (K::pi * K::pi))).epsilon(1e-13));
  CHECK(weak_saddle_alpha(AdmissibleTriple(0, 0, 1), Form::P, LogIndex::from_n(100)) ==
        doctest::Approx(-2.0537).epsilon(1e-4));
  for (double n : {10.0, 1e3, 1e9}) {
    CHECK(weak_saddle_alpha(AdmissibleTriple(0, 1, 0), Form::Q, LogIndex::from_n(n)) ==
          doctest::Approx(std::log(K::log2 / n)).epsilon(1e-13));
  }
  CHECK(weak_saddle_alpha(AdmissibleTriple(1, 0, 0), Form::P, LogIndex::from_n(8 * K::zeta3)) ==
        doctest::Approx(-std::log(4.0) / 3).epsilon(1e-13));
  CHECK_THROWS_AS(weak_saddle_alpha(AdmissibleTriple(0, 1, 0), Form::P, LogIndex::from_n(1)),
                  std::domain_error);
}

TEST_CASE("weak saddle for (0,1,0) P keeps the leading term only") {
  for (double n : {10.0, 1e3, 1e6}) {
    const double x = std::exp(weak_saddle_alpha(AdmissibleTriple(0, 1, 0), Form::P,
                                                LogIndex::from_n(n)));
    // leading saddle equation: -log x / x = n
    CHECK(-std::log(x) / x == doctest::Approx(n).epsilon(1e-12));
  }
}

TEST_CASE("saddle residual with the gamma term, (0,1,0) P") {
  for (double n : {10.0, 1e3, 1e6}) {
    const double x = lambert_w_from_log(K::euler_gamma + std::log(n)) / n;
    const double lhs = -std::log(x) / x + K::euler_gamma / x;
    CHECK(std::abs(lhs - n) / n <= 1e-10);
  }
}

TEST_CASE("log growth matches the classical exponents") {
  for (double n = 3.0; n < 1e12; n *= 1.7) {
    const LogIndex idx = LogIndex::from_n(n);
    const double hr_p = K::pi * std::sqrt(2 * n / 3);
    const double hr_q = K::pi * std::sqrt(n / 3);
    const double lsq = std::log(n) * std::log(n) / 2;
    CHECK(std::abs(log_coeff_asymptotic(AdmissibleTriple(0, 0, 1), Form::P, idx) - hr_p) <= 1e-12 * hr_p);
    CHECK(std::abs(log_coeff_asymptotic(AdmissibleTriple(0, 0, 1), Form::Q, idx) - hr_q) <= 1e-12 * hr_q);
    CHECK(std::abs(log_coeff_asymptotic(AdmissibleTriple(0, 1, 0), Form::P, idx) - lsq) <= 1e-12 * lsq);
  }
  const double e = std::exp(1.0);
  CHECK(log_coeff_asymptotic(AdmissibleTriple(2, 0, 0), Form::P, LogIndex::from_n(e)) ==
        doctest::Approx(1.5 * std::cbrt(2 * K::zeta3 / 3) * std::pow(e, 2.0 / 3)).epsilon(1e-13));
}

TEST_CASE("log growth constants are positive for small triples") {
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 3; ++j)
      for (unsigned k = 0; k <= 3; ++k) {
        if (i + j + k == 0) continue;
        const AdmissibleTriple t(i, j, k);
        for (Form form : {Form::P, Form::Q}) {
          if (i == 0 && k == 0 && form == Form::Q && j == 0) continue;
          CHECK_NOTHROW(weak_saddle_alpha(t, form, LogIndex::from_n(1e4)));
          CHECK(log_coeff_asymptotic(t, form, LogIndex::from_n(1e4)) > 0.0);
        }
      }
}

TEST_CASE("capabilities") {
  CHECK(model_for(AdmissibleTriple(0, 1, 0), Form::P).capability == Capability::FullCoefficient);
  CHECK(model_for(AdmissibleTriple(0, 2, 0), Form::Q).capability == Capability::FullCoefficient);
  CHECK(model_for(AdmissibleTriple(0, 2, 0), Form::P).capability == Capability::LogOnly);
  CHECK(model_for(AdmissibleTriple(1, 0, 1), Form::P).solvable);
  CHECK(model_for(AdmissibleTriple(1, 0, 1), Form::P).capability == Capability::LogOnly);
  CHECK_FALSE(model_for(AdmissibleTriple(2, 0, 0), Form::P).solvable);
  CHECK_THROWS_AS(coeff_asymptotic(AdmissibleTriple(2, 0, 0), Form::P, LogIndex::from_n(10)),
                  std::domain_error);
  CHECK_THROWS_AS(coeff_asymptotic(AdmissibleTriple(0, 1, 0), Form::P, LogIndex::from_n(1)),
                  std::domain_error);
}

TEST_CASE("partition number estimate") {
  const CoeffEstimate e = hardy_ramanujan(Form::P, LogIndex::from_n(100));
  CHECK(e.log_value == doctest::Approx(std::log(1.993e8)).epsilon(1e-4));
  CHECK(e.scientific(3) == "1.993e+08");
  const auto p = ogf_coeffs_euler(AdmissibleTriple(0, 0, 1), Form::P, 100);
  CHECK(p.values[100] == mpz_class("190569292"));
  CHECK(ratio_exact_over_estimate(p, 100) == doctest::Approx(0.956).epsilon(1e-3));
}

TEST_CASE("closed form for (0,1,0) Q has the stated power law") {
  const AdmissibleTriple t(0, 1, 0);
  const double c = std::pow(2.0, K::euler_gamma - K::log2 / 2 + 0.5) /
                   (std::sqrt(K::pi) * std::pow(K::log2, K::log2 - 0.5));
  for (double n : {10.0, 1e3, 1e8}) {
    CHECK(coeff_asymptotic(t, Form::Q, LogIndex::from_n(n)).log_value ==
          doctest::Approx(std::log(c) + (K::log2 - 1) * std::log(n)).epsilon(1e-13));
  }
}

TEST_CASE("closed form for (0,2,0) Q approaches the exact values from below") {
  const auto q = egf_coeffs(AdmissibleTriple(0, 2, 0), Form::Q, 400);
  double previous = 0.0;
  for (std::size_t n : {100, 200, 400}) {
    const double r = ratio_exact_over_estimate(q, n);
    CHECK(r > previous);
    CHECK(r > 0.5);
    CHECK(r < 1.2);
    previous = r;
  }
}

TEST_CASE("w_n ratio tables") {
  CHECK(truncate_decimal(kotesovec_ratio(LogIndex::from_n(2)), 4) == "2.7032");
  CHECK(truncate_decimal(kotesovec_ratio(LogIndex::from_n(1000)), 4) == "0.6899");
  CHECK(truncate_decimal(kotesovec_ratio(LogIndex::from_log10(1e5)), 4) == "0.9998");
  double previous = 0.0;
  for (double e : {4.0, 6.0, 8.0, 10.0, 20.0, 50.0, 1e2, 1e3, 1e4, 1e5}) {
    const double r = kotesovec_ratio(LogIndex::from_log10(e));
    CHECK(r > previous);
    CHECK(r < 1.0);
    previous = r;
  }
  CHECK(kotesovec_ratio(LogIndex::from_log10(1e12)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(kotesovec_conjectured_log(LogIndex::from_n(std::exp(2.0))) ==
        doctest::Approx(2 * K::log2).epsilon(1e-14));
}

TEST_CASE("mantissa view") {
  CHECK(CoeffEstimate{std::log(12345.678)}.scientific() == "1.2346e+04");
  CHECK(CoeffEstimate{std::log(9.99999)}.scientific(2) == "1.00e+01");
  CHECK(CoeffEstimate{1e6}.log10_value() == doctest::Approx(1e6 / std::log(10.0)));
}
