#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace partforge {

/// Parameter (i, j, k) selecting one member of the P/Q product families
///
///   P(z) = prod (1 - z^{n_1..n_i d_1..d_j e_1..e_k})^{-n_1..n_i / d_1..d_j}
///   Q(z) = prod (1 + z^{n_1..n_i d_1..d_j e_1..e_k})^{ n_1..n_i / d_1..d_j}
///
/// i counts the numerator indices, j the denominator indices and k the extra
/// indices. A triple is admissible when i + j + k >= 1; the constructor
/// refuses anything else, so every AdmissibleTriple in the program is valid.
class AdmissibleTriple {
 public:
  AdmissibleTriple(unsigned i, unsigned j, unsigned k);

  /// Parses "I,J,K" (nonnegative decimal integers, no spaces).
  static AdmissibleTriple parse(std::string_view text);

  unsigned i() const { return i_; }
  unsigned j() const { return j_; }
  unsigned k() const { return k_; }

  std::string to_string() const;

  auto operator<=>(const AdmissibleTriple&) const = default;

 private:
  unsigned i_;
  unsigned j_;
  unsigned k_;
};

/// Which of the two product families.
enum class Form { P, Q };

const char* to_string(Form form);
Form parse_form(std::string_view text);

}  // namespace partforge
