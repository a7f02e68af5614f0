// Robin-type bounds for spoof multiperfect numbers.
//
// Robin's inequality sigma(n) < e^gamma n ln ln n (n > 5040) holds for all
// such n iff the Riemann Hypothesis does. Substituting
// sigma(n) = k n x / S_alpha(x) gives k x / S_alpha(x) < e^gamma ln ln n.
// Every report here is conditional on RH; nothing is proved.

#pragma once

#include "spoofperfect/arithmetic.hpp"
#include "spoofperfect/spoof.hpp"

namespace spoofperfect {

inline constexpr double kEulerGamma = 0.5772156649015329;
/// Robin's inequality is only claimed above this n.
inline constexpr u64 kRobinMinimumN = 5040;
/// Relative width of the band in which lhs and rhs count as too close to call.
inline constexpr double kBorderlineTolerance = 1e-9;

/// |lhs - rhs| < kBorderlineTolerance * |rhs|.
bool within_borderline(double lhs, double rhs) noexcept;

/// e^gamma = 1.781072417990198 (computed once from kEulerGamma).
double exp_gamma();

struct RobinReport {
  /// lhs = lhs_num / lhs_den in lowest terms.
  u128 lhs_num = 0;
  u128 lhs_den = 1;
  double lhs = 0.0;
  double rhs = 0.0;
  /// n > 5040, or always for the Descartes corollary.
  bool applicable = false;
  /// lhs < rhs; only meaningful when applicable.
  bool satisfied = false;
  /// |lhs - rhs| < kBorderlineTolerance * rhs.
  bool borderline = false;
  double gamma_used = kEulerGamma;
};

/// k x / S_alpha(x) against e^gamma ln ln n. The caller is expected to pass
/// a spoof that verifies; S_alpha(x) must fit in 128 bits
/// (std::overflow_error otherwise).
RobinReport robin_check(const SpoofNumber& spoof);

/// Descartes case k = 2, alpha = 1 with no n > 5040 restriction. Requires
/// n, x >= 2 (std::invalid_argument otherwise).
RobinReport descartes_check(u64 n, u64 x);

/// ln ln of the size a genuine k-perfect number would need under Robin's
/// bound, i.e. k e^-gamma. The bound itself is e^(e^value).
double expected_threshold(u64 k);

}  // namespace spoofperfect
