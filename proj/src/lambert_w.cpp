#include "partforge/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace partforge {

namespace {

constexpr int kMaxIterations = 50;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kE = 2.71828182845904523536;

[[noreturn]] void no_convergence(double x) {
  throw std::runtime_error("lambert_w: Halley iteration did not converge for x = " +
                           std::to_string(x));
}

}  // namespace

double lambert_w(double x) {
  constexpr double branch_point = -1.0 / kE;
  if (std::isnan(x) || x < branch_point) {
    throw std::domain_error("lambert_w: argument below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w = 0.0;
  if (x < -0.25) {
    const double p = std::sqrt(2.0 * (kE * x + 1.0));
    if (p == 0.0) return -1.0;
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x <= kE) {
    w = std::log1p(x);
    if (std::fabs(x) < 1e-3) w = x - x * x;
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) return w;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 4.0 * kEps * (1.0 + std::fabs(w))) return w;
  }
  no_convergence(x);
}

double lambert_w_from_log(double log_x) {
  if (std::isnan(log_x)) throw std::domain_error("lambert_w_from_log: NaN argument");
  if (log_x <= 1.0) return lambert_w(std::exp(log_x));
  if (std::isinf(log_x)) return log_x;

  // g(w) = w + log w - log_x, g' = 1 + 1/w, g'' = -1/w^2.
  const double l = std::log(log_x);
  double w = log_x - l + l / log_x;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const double g = w + std::log(w) - log_x;
    const double g1 = 1.0 + 1.0 / w;
    const double g2 = -1.0 / (w * w);
    const double step = g / (g1 - g * g2 / (2.0 * g1));
    w -= step;
    if (std::fabs(step) <= 4.0 * kEps * std::fabs(w)) return w;
  }
  no_convergence(log_x);
}

}  // namespace partforge
