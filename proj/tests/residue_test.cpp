#include <cmath>

#include "doctest.h"
#include "partforge/constants.hpp"
#include "partforge/residue.hpp"

using namespace partforge;
using K = MathConstants;

namespace {

// Euler-Maclaurin tails keep every sum below short enough for long double.
long double gamma_estimate() {
  const int n = 1000;
  long double h = 0;
  for (int k = n; k >= 1; --k) h += 1.0L / k;
  const long double x = n;
  return h - std::log(x) - 1 / (2 * x) + 1 / (12 * x * x) - 1 / (120 * x * x * x * x);
}

long double zeta3_estimate() {
  const int n = 1000;
  long double s = 0;
  for (int k = n - 1; k >= 1; --k) s += 1.0L / ((long double)k * k * k);
  const long double x = n;
  return s + 1 / (2 * x * x) + 1 / (2 * x * x * x) + 1 / (4 * x * x * x * x) -
         1 / (12 * std::pow(x, 6.0L));
}

long double gamma1_estimate() {
  const int n = 10000;
  long double s = 0;
  for (int k = n; k >= 1; --k) s += std::log((long double)k) / k;
  const long double x = n, l = std::log(x);
  const long double f = l / x, f1 = (1 - l) / (x * x), f3 = (11 - 6 * l) / (x * x * x * x);
  return s - l * l / 2 - f / 2 - f1 / 12 + f3 / 720;
}

long double zeta_prime_minus1_estimate() {
  const int n = 200;
  long double s = 0;
  for (int k = n; k >= 1; --k) s += k * std::log((long double)k);
  const long double x = n;
  const long double log_glaisher = s - (x * x / 2 + x / 2 + 1.0L / 12) * std::log(x) + x * x / 4 -
                                   1 / (720 * x * x) + 1 / (5040 * x * x * x * x);
  return 1.0L / 12 - log_glaisher;
}

void check_rel(double got, long double expected, double tol) {
  CHECK(std::abs(got - (double)expected) <= tol * std::abs((double)expected));
}

}  // namespace

TEST_CASE("stored constants agree with independent evaluations") {
  check_rel(K::euler_gamma, gamma_estimate(), 1e-13);
  check_rel(K::zeta3, zeta3_estimate(), 1e-13);
  check_rel(K::stieltjes_gamma1, gamma1_estimate(), 1e-12);
  check_rel(K::zeta_prime_minus1, zeta_prime_minus1_estimate(), 1e-12);
  check_rel(K::pi, std::acos(-1.0L), 1e-15);
  check_rel(K::log2, std::log(2.0L), 1e-15);
  check_rel(K::log_2pi, std::log(2 * std::acos(-1.0L)), 1e-15);
}

TEST_CASE("leading constants") {
  CHECK(residue_leading(AdmissibleTriple(1, 0, 0), Form::P, Pole::Two) ==
        doctest::Approx(K::zeta3).epsilon(1e-15));
  CHECK(residue_leading(AdmissibleTriple(0, 0, 1), Form::P, Pole::One) ==
        doctest::Approx(K::pi * K::pi / 6).epsilon(1e-15));
  CHECK(residue_leading(AdmissibleTriple(0, 1, 0), Form::Q, Pole::Zero) ==
        doctest::Approx(-K::log2).epsilon(1e-15));
  CHECK(residue_leading(AdmissibleTriple(1, 0, 0), Form::Q, Pole::Two) ==
        doctest::Approx(0.75 * K::zeta3).epsilon(1e-15));
  CHECK(residue_leading(AdmissibleTriple(0, 0, 1), Form::Q, Pole::One) ==
        doctest::Approx(K::pi * K::pi / 12).epsilon(1e-15));
  CHECK(residue_leading(AdmissibleTriple(0, 1, 0), Form::P, Pole::Zero) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(residue_leading(AdmissibleTriple(0, 1, 1), Form::P, Pole::Two), PoleAbsent);
  CHECK_THROWS_AS(residue_leading(AdmissibleTriple(1, 1, 0), Form::P, Pole::One), PoleAbsent);
}

TEST_CASE("degrees") {
  const AdmissibleTriple t(2, 1, 3);
  CHECK(residue_degree(t, Form::P, Pole::Two) == 1);
  CHECK(residue_degree(t, Form::P, Pole::One) == 2);
  CHECK(residue_degree(t, Form::P, Pole::Zero) == 2);
  CHECK(residue_degree(t, Form::Q, Pole::Zero) == 1);
  CHECK(role_for(Form::P, Pole::Zero) == ResidueRole::C);
  CHECK(role_for(Form::Q, Pole::Zero) == ResidueRole::D);
  CHECK(to_char(ResidueRole::B) == 'b');
}

TEST_CASE("tabulated polynomials") {
  const auto c = residue_polynomial(AdmissibleTriple(0, 1, 0), Form::P, Pole::Zero);
  REQUIRE(c.degree() == 2);
  const double g = K::euler_gamma;
  CHECK(c.coefficients[0] ==
        doctest::Approx(K::pi * K::pi / 12 - g * g / 2 - 2 * K::stieltjes_gamma1).epsilon(1e-14));
  CHECK(c.coefficients[1] == doctest::Approx(-g).epsilon(1e-15));
  CHECK(c.coefficients[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c(2.0) == doctest::Approx(c.coefficients[0] - 2 * g + 2.0).epsilon(1e-14));
  CHECK(c.derivative(2.0) == doctest::Approx(-g + 2.0).epsilon(1e-14));

  const auto d = residue_polynomial(AdmissibleTriple(1, 0, 0), Form::Q, Pole::Zero);
  CHECK(d.degree() == 0);
  CHECK(d.leading() == doctest::Approx(-K::log2 / 12).epsilon(1e-15));

  const auto d2 = residue_polynomial(AdmissibleTriple(0, 2, 0), Form::Q, Pole::Zero);
  CHECK(d2.degree() == 2);
  CHECK(d2.leading() == doctest::Approx(K::log2 / 2).epsilon(1e-15));

  CHECK_THROWS_AS(residue_polynomial(AdmissibleTriple(2, 0, 0), Form::P, Pole::Zero), NotTabulated);
  CHECK_THROWS_AS(residue_polynomial(AdmissibleTriple(0, 2, 0), Form::P, Pole::Zero), NotTabulated);
  CHECK_THROWS_AS(residue_polynomial(AdmissibleTriple(0, 1, 0), Form::P, Pole::Two), PoleAbsent);
}

TEST_CASE("every tabulated polynomial matches its closed-form leading coefficient") {
  const auto rows = tabulated_residues();
  CHECK(rows.size() >= 9);
  for (const auto& row : rows) {
    const auto poly = residue_polynomial(row.triple, row.form, row.pole);
    CHECK(poly.degree() == residue_degree(row.triple, row.form, row.pole));
    const double closed = residue_leading(row.triple, row.form, row.pole);
    CHECK(std::abs(poly.leading() - closed) <= 1e-12 * std::abs(closed));
  }
}
