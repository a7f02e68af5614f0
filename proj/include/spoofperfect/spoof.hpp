// Spoof k-perfect numbers of order alpha.
//
// s = n * x is a spoof k-perfect number of order alpha when
//
//     sigma(n) * (1 + x + ... + x^alpha) = k * n * x,
//
// i.e. s would be k-perfect if x were a prime of multiplicity alpha.

#pragma once

#include <compare>
#include <tuple>
#include <vector>

#include "spoofperfect/arithmetic.hpp"

namespace spoofperfect {

struct SpoofNumber {
  u64 s = 0;
  u64 n = 0;
  u64 x = 0;
  u64 k = 0;
  unsigned alpha = 0;
  bool x_is_prime = false;
  bool x_coprime_n = false;
  bool s_odd = false;

  friend bool operator==(const SpoofNumber&, const SpoofNumber&) = default;
};

/// Report order: ascending s, then k, then alpha, then n.
inline bool report_order(const SpoofNumber& a, const SpoofNumber& b) {
  return std::tie(a.s, a.k, a.alpha, a.n) < std::tie(b.s, b.k, b.alpha, b.n);
}

struct Classification {
  bool x_is_prime;
  bool x_coprime_n;
  bool s_odd;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(u64 n, u64 x);

/// Candidate test for a single (n, k).
///
/// Reduces q = sigma_n / (k n) to num/den and accepts order alpha when
/// den - num == S_alpha(num) - num with num > 1; the spoof factor is num.
/// At most one alpha can match, so the result has length 0 or 1.
///
/// Throws std::invalid_argument when sigma_n = 0, n < 2, k < 2 or
/// alpha_max < 1, and std::overflow_error when k * n or n * x does not fit
/// in 64 bits.
std::vector<SpoofNumber> check_candidate(u64 n, u64 sigma_n, u64 k, unsigned alpha_max);

/// Checks sigma(n) * S_alpha(x) == k * n * x (and s == n * x) along a path
/// that shares nothing with check_candidate: sigma from a factorization of
/// n and S_alpha by direct powering. Throws std::overflow_error if an
/// intermediate leaves 128 bits.
bool verify_spoof(const SpoofNumber& candidate);

/// Fills in s and the classification flags for a claimed (n, x, k, alpha).
SpoofNumber make_spoof(u64 n, u64 x, u64 k, unsigned alpha);

/// Fast path for scanning many k against one n.
///
/// Splits g = gcd(sigma, n) out once, after which gcd(sigma, k n) only
/// needs gcd(sigma / g, k). match() returns the same answer as
/// check_candidate without allocating or classifying.
class CandidateScanner {
 public:
  CandidateScanner(u64 n, u64 sigma_n, unsigned alpha_max);

  /// Matching order for this k, or 0 when (n, k) is not a spoof.
  /// Requires 2 <= k and k * n < 2^63.
  unsigned match(u64 k) const noexcept;

  /// Smallest k with k n > sigma(n); below it q >= 1 and nothing matches.
  u64 first_viable_k() const noexcept { return first_viable_k_; }

 private:
  u64 sigma_part_;
  u64 n_part_;
  u64 first_viable_k_;
  unsigned alpha_max_;
  bool narrow_;
  const std::uint16_t* gcd_table_;
};

}  // namespace spoofperfect
