#include "spoofperfect/robin.hpp"

#include <cmath>
#include <stdexcept>

namespace spoofperfect {

namespace {

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Shared by robin_check and descartes_check so both produce identical lhs.
RobinReport evaluate(u64 n, u64 k, u64 x, unsigned alpha, bool applicable) {
  const auto wide = geometric_sum_wide(x, alpha);
  if (!wide) throw std::overflow_error("robin: S_alpha(x) exceeds 128 bits");
  const u128 geometric = *wide;
  const u128 kx = static_cast<u128>(k) * x;
  const u128 g = gcd128(kx, geometric);

  RobinReport report;
  report.lhs_num = kx / g;
  report.lhs_den = geometric / g;
  report.lhs = static_cast<double>(static_cast<long double>(report.lhs_num) /
                                   static_cast<long double>(report.lhs_den));
  report.applicable = applicable;
  report.gamma_used = kEulerGamma;
  if (!applicable) return report;

  report.rhs = exp_gamma() * std::log(std::log(static_cast<double>(n)));
  report.satisfied = report.lhs < report.rhs;
  report.borderline = within_borderline(report.lhs, report.rhs);
  return report;
}

}  // namespace

bool within_borderline(double lhs, double rhs) noexcept {
  return std::fabs(lhs - rhs) < kBorderlineTolerance * std::fabs(rhs);
}

double exp_gamma() {
  static const double value = std::exp(kEulerGamma);
  return value;
}

RobinReport robin_check(const SpoofNumber& spoof) {
  if (spoof.x < 2 || spoof.alpha < 1) throw std::invalid_argument("robin_check: need x >= 2, alpha >= 1");
  return evaluate(spoof.n, spoof.k, spoof.x, spoof.alpha, spoof.n > kRobinMinimumN);
}

RobinReport descartes_check(u64 n, u64 x) {
  if (n < 2 || x < 2) throw std::invalid_argument("descartes_check: need n >= 2 and x >= 2");
  return evaluate(n, 2, x, 1, true);
}

double expected_threshold(u64 k) {
  if (k < 2) throw std::invalid_argument("expected_threshold: k must be >= 2");
  return static_cast<double>(k) * std::exp(-kEulerGamma);
}

}  // namespace spoofperfect
