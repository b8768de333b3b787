#include "partforge/residue.hpp"

#include <cmath>

#include "partforge/constants.hpp"

namespace partforge {

namespace {

using K = MathConstants;

double factorial(unsigned n) { return std::tgamma(n + 1.0); }
double sign_pow(int exponent) { return exponent % 2 == 0 ? 1.0 : -1.0; }

bool pole_exists(const AdmissibleTriple& t, Pole pole) {
  switch (pole) {
    case Pole::Two: return t.i() >= 1;
    case Pole::One: return t.k() >= 1;
    case Pole::Zero: return true;
  }
  return false;
}

void require_pole(const AdmissibleTriple& t, Pole pole) {
  if (!pole_exists(t, pole)) {
    throw PoleAbsent("pole absent for this triple: s = " +
                     std::to_string(static_cast<int>(pole)) + " for " + t.to_string());
  }
}

bool is(const AdmissibleTriple& t, unsigned i, unsigned j, unsigned k) {
  return t.i() == i && t.j() == j && t.k() == k;
}

}  // namespace

ResidueRole role_for(Form form, Pole pole) {
  switch (pole) {
    case Pole::Two: return ResidueRole::A;
    case Pole::One: return ResidueRole::B;
    case Pole::Zero: return form == Form::P ? ResidueRole::C : ResidueRole::D;
  }
  return ResidueRole::C;
}

char to_char(ResidueRole role) {
  switch (role) {
    case ResidueRole::A: return 'a';
    case ResidueRole::B: return 'b';
    case ResidueRole::C: return 'c';
    case ResidueRole::D: return 'd';
  }
  return '?';
}

double ResiduePolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ResiduePolynomial::derivative(double x) const {
  double acc = 0.0;
  for (std::size_t d = coefficients.size(); d-- > 1;) acc = acc * x + d * coefficients[d];
  return acc;
}

unsigned residue_degree(const AdmissibleTriple& t, Form form, Pole pole) {
  require_pole(t, pole);
  switch (pole) {
    case Pole::Two: return t.i() - 1;
    case Pole::One: return t.k() - 1;
    case Pole::Zero: return form == Form::P ? t.j() + 1 : t.j();
  }
  return 0;
}

double residue_leading(const AdmissibleTriple& t, Form form, Pole pole) {
  require_pole(t, pole);
  const int i = static_cast<int>(t.i());
  const int j = static_cast<int>(t.j());
  const int k = static_cast<int>(t.k());
  switch (pole) {
    case Pole::Two: {
      const double a = sign_pow(i - 1) * std::pow(K::zeta3, j + 1) * std::pow(K::pi, 2 * k) /
                       (std::pow(6.0, k) * factorial(i - 1));
      return form == Form::P ? a : 0.75 * a;
    }
    case Pole::One: {
      const double b = sign_pow(i + k - 1) * std::pow(K::pi, 2 * (j + 1)) /
                       (std::pow(6.0, j + 1) * std::pow(2.0, i) * factorial(k - 1));
      return form == Form::P ? b : 0.5 * b;
    }
    case Pole::Zero:
      if (form == Form::P) {
        return sign_pow(i + j + k + 1) /
               (std::pow(2.0, k) * factorial(j + 1) * std::pow(12.0, i));
      }
      return K::log2 * sign_pow(i + j + k) /
             (std::pow(2.0, k) * factorial(j) * std::pow(12.0, i));
  }
  return 0.0;
}

ResiduePolynomial residue_polynomial(const AdmissibleTriple& t, Form form, Pole pole) {
  require_pole(t, pole);
  const double pi2 = K::pi * K::pi;
  const double g = K::euler_gamma;
  const double g1 = K::stieltjes_gamma1;
  const double l2 = K::log2;
  std::vector<double> c;

  if (form == Form::P) {
    if (is(t, 1, 0, 0)) {
      if (pole == Pole::Two) c = {K::zeta3};
      if (pole == Pole::Zero) c = {K::zeta_prime_minus1, 1.0 / 12.0};
    } else if (is(t, 1, 0, 1)) {
      if (pole == Pole::Two) c = {pi2 * K::zeta3 / 6.0};
      if (pole == Pole::One) c = {-pi2 / 12.0};
      if (pole == Pole::Zero) c = {-K::zeta_prime_minus1 / 2.0 + K::log_2pi / 24.0, -1.0 / 24.0};
    } else if (is(t, 0, 0, 1)) {
      if (pole == Pole::One) c = {pi2 / 6.0};
      if (pole == Pole::Zero) c = {-K::log_2pi / 2.0, 0.5};
    } else if (is(t, 0, 1, 0)) {
      c = {pi2 / 12.0 - g * g / 2.0 - 2.0 * g1, -g, 0.5};
    }
  } else {
    if (is(t, 1, 0, 0)) {
      if (pole == Pole::Two) c = {3.0 * K::zeta3 / 4.0};
      if (pole == Pole::Zero) c = {-l2 / 12.0};
    } else if (is(t, 1, 0, 1)) {
      if (pole == Pole::Two) c = {pi2 * K::zeta3 / 8.0};
      if (pole == Pole::One) c = {-pi2 / 24.0};
      if (pole == Pole::Zero) c = {l2 / 24.0};
    } else if (is(t, 0, 0, 1)) {
      if (pole == Pole::One) c = {pi2 / 12.0};
      if (pole == Pole::Zero) c = {-l2 / 2.0};
    } else if (is(t, 0, 1, 0)) {
      c = {g * l2 - l2 * l2 / 2.0, -l2};
    } else if (is(t, 0, 2, 0)) {
      c = {g * g * l2 / 2.0 + pi2 * l2 / 12.0 - g * l2 * l2 + l2 * l2 * l2 / 6.0 - 3.0 * g1 * l2,
           l2 * l2 / 2.0 - 2.0 * g * l2, l2 / 2.0};
    }
  }

  if (c.empty()) {
    throw NotTabulated("polynomial not tabulated for " + t.to_string() + " " + to_string(form) +
                       " at s = " + std::to_string(static_cast<int>(pole)) +
                       "; only the leading coefficient is available");
  }
  return {pole, role_for(form, pole), std::move(c)};
}

std::vector<TabulatedResidue> tabulated_residues() {
  std::vector<TabulatedResidue> out;
  const AdmissibleTriple candidates[] = {{1, 0, 0}, {1, 0, 1}, {0, 0, 1}, {0, 1, 0}, {0, 2, 0}};
  for (Form form : {Form::P, Form::Q}) {
    for (const auto& t : candidates) {
      for (Pole pole : {Pole::Two, Pole::One, Pole::Zero}) {
        try {
          residue_polynomial(t, form, pole);
          out.push_back({t, form, pole});
        } catch (const std::domain_error&) {
        }
      }
    }
  }
  return out;
}

}  // namespace partforge
