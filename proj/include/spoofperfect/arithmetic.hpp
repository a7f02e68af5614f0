// Exact integer primitives: divisor-sum sieve, ratio reduction, capped
// geometric sums, deterministic primality and small-number factorization.
//
// Everything here works on unsigned 64-bit values with 128-bit
// intermediates. Nothing silently wraps: overflow either surfaces as an
// exception or, for geometric_sum, as an empty optional.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spoofperfect {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Largest n the sieve will cover.
inline constexpr u64 kSieveLimit = u64{1} << 40;
/// Largest number of entries a single SigmaTable may hold (2 GiB of values).
inline constexpr u64 kMaxSieveSpan = u64{1} << 28;

/// Thrown when a request exceeds the sieve's resource guard.
class RangeTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Thrown for malformed ranges such as lo > hi or lo = 0.
class InvalidRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Read-only sigma(n) values for the contiguous range [lo, hi].
class SigmaTable {
 public:
  SigmaTable(u64 lo, std::vector<u64> values);

  u64 lo() const noexcept { return lo_; }
  u64 hi() const noexcept { return lo_ + values_.size() - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(u64 n) const noexcept { return n >= lo_ && n - lo_ < values_.size(); }

  /// sigma(n) for a covered n. Unchecked.
  u64 operator[](u64 n) const noexcept { return values_[n - lo_]; }
  /// sigma(n) for a covered n; throws std::out_of_range otherwise.
  u64 at(u64 n) const;

  std::span<const u64> values() const noexcept { return values_; }

 private:
  u64 lo_;
  std::vector<u64> values_;
};

/// Segmented divisor-accumulation sieve over [lo, hi].
///
/// Every divisor pair (d, n/d) with d <= sqrt(n) is added once, so the cost
/// is O((hi - lo) log sqrt(hi) + sqrt(hi)). Throws InvalidRange when
/// lo = 0 or lo > hi, RangeTooLarge when hi > kSieveLimit or the span
/// exceeds kMaxSieveSpan.
SigmaTable sieve_sigma(u64 lo, u64 hi);

/// A positive fraction in lowest terms.
struct ReducedRatio {
  u64 num;
  u64 den;

  friend bool operator==(const ReducedRatio&, const ReducedRatio&) = default;
};

/// numerator/denominator divided through by their gcd. Throws
/// std::invalid_argument on a zero argument.
ReducedRatio reduce_ratio(u64 numerator, u64 denominator);

/// 1 + x + x^2 + ... + x^alpha, or nullopt as soon as a partial sum exceeds
/// cap. Requires x >= 2 and alpha >= 1 (std::invalid_argument otherwise).
std::optional<u64> geometric_sum(u64 x, unsigned alpha, u64 cap);

/// 1 + x + ... + x^alpha in 128 bits, or nullopt when it does not fit.
std::optional<u128> geometric_sum_wide(u64 x, unsigned alpha);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 m);

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; factorize(1) is
/// empty. Trial division up to 2^20, Pollard-Brent rho beyond.
std::vector<PrimePower> factorize(u64 m);

/// Renders a factorization as "19^2*61"; the empty product renders as "1".
std::string format_factorization(std::span<const PrimePower> factors);

/// sigma(m) computed from factorize(m). Independent of the sieve.
u128 divisor_sum(u64 m);

/// Decimal rendering of a 128-bit value.
std::string to_string(u128 value);

/// a * b, or nullopt on 128-bit overflow.
std::optional<u128> checked_mul(u128 a, u128 b);

}  // namespace spoofperfect
