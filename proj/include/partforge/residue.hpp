#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "partforge/triple.hpp"

namespace partforge {

/// Poles of the Mellin transform of log F(e^{-t}) that feed the expansion of
/// log F near z = 1.
enum class Pole { Two = 2, One = 1, Zero = 0 };

/// Name of the polynomial at each pole: a at s = 2, b at s = 1, c (for P) or
/// d (for Q) at s = 0.
enum class ResidueRole { A, B, C, D };

ResidueRole role_for(Form form, Pole pole);
char to_char(ResidueRole role);

/// The requested pole does not occur for this triple.
class PoleAbsent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Only the leading coefficient is known in closed form for this case.
class NotTabulated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Residue of L*(s) t^{-s} at a pole, as a polynomial in log t divided by
/// t^pole. Coefficients are in ascending degree.
struct ResiduePolynomial {
  Pole pole;
  ResidueRole role;
  std::vector<double> coefficients;

  std::size_t degree() const { return coefficients.size() - 1; }
  double leading() const { return coefficients.back(); }
  /// Horner evaluation at x = log t.
  double operator()(double x) const;
  /// First derivative with respect to x.
  double derivative(double x) const;
};

/// Degree of the residue polynomial: i-1 (s=2), k-1 (s=1), j+1 (s=0, P) or
/// j (s=0, Q). Throws PoleAbsent when the pole does not exist.
unsigned residue_degree(const AdmissibleTriple& triple, Form form, Pole pole);

/// Leading coefficient A, B, C or D in closed form; valid for every triple
/// that has the pole. Throws PoleAbsent otherwise.
double residue_leading(const AdmissibleTriple& triple, Form form, Pole pole);

/// Full polynomial for the tabulated cases: P with (1,0,0), (1,0,1), (0,0,1),
/// (0,1,0); Q with those and (0,2,0). Throws PoleAbsent or NotTabulated.
ResiduePolynomial residue_polynomial(const AdmissibleTriple& triple, Form form, Pole pole);

/// Every (triple, form, pole) for which residue_polynomial succeeds.
struct TabulatedResidue {
  AdmissibleTriple triple;
  Form form;
  Pole pole;
};
std::vector<TabulatedResidue> tabulated_residues();

}  // namespace partforge
