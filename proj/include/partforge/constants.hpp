#pragma once

namespace partforge {

/// Reference constants used by the residue polynomials (20 significant digits).
struct MathConstants {
  static constexpr double pi = 3.14159265358979323846;
  /// Euler-Mascheroni constant, gamma_0.
  static constexpr double euler_gamma = 0.57721566490153286061;
  /// First Stieltjes constant gamma_1.
  static constexpr double stieltjes_gamma1 = -0.07281584548367672486;
  static constexpr double zeta3 = 1.20205690315959428540;
  /// zeta'(-1) = 1/12 - log(Glaisher's constant).
  static constexpr double zeta_prime_minus1 = -0.16542114370045092921;
  static constexpr double log2 = 0.69314718055994530942;
  static constexpr double log_2pi = 1.83787706640934548356;
};

}  // namespace partforge
