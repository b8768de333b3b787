#pragma once

namespace partforge {

/// Principal branch W_0(x), the solution w >= -1 of w e^w = x, for x >= -1/e.
/// Halley iteration from a branch-point series, a log-log asymptotic guess or
/// log1p depending on x. Throws std::domain_error below -1/e (or for NaN).
double lambert_w(double x);

/// W_0(e^log_x) without forming e^log_x: solves w + log w = log_x. Works for
/// arguments far beyond double range, e.g. log_x = 1e5 * log(10).
double lambert_w_from_log(double log_x);

}  // namespace partforge
