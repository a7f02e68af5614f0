#include "spoofperfect/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace spoofperfect {

namespace {

u64 isqrt(u64 v) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<u128>(r) * r > v) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr u64 kTrialBound = u64{1} << 20;

// Odd primes below kTrialBound with their inverse mod 2^64: p | m exactly
// when m * inverse <= floor((2^64 - 1) / p).
struct TrialPrime {
  u64 prime;
  u64 inverse;
  u64 limit;
};

const std::vector<TrialPrime>& trial_primes() {
  static const std::vector<TrialPrime> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<TrialPrime> out;
    for (u64 p = 3; p < kTrialBound; p += 2) {
      if (composite[p]) continue;
      for (u64 m = p * p; m < kTrialBound; m += 2 * p) composite[m] = true;
      u64 inverse = p;  // Newton iteration, each step doubles the correct low bits
      for (int i = 0; i < 5; ++i) inverse *= 2 - p * inverse;
      out.push_back({p, inverse, ~u64{0} / p});
    }
    return out;
  }();
  return primes;
}

// Pollard-Brent; m must be an odd composite.
u64 find_factor(u64 m) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, m) + c) % m;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = (mulmod(y, y, m) + c) % m;
          q = mulmod(q, x > y ? x - y : y - x, m);
        }
        g = std::gcd(q, m);
      }
    }
    if (g == m) {
      do {
        ys = (mulmod(ys, ys, m) + c) % m;
        g = std::gcd(x > ys ? x - ys : ys - x, m);
      } while (g == 1);
    }
    if (g != m) return g;
  }
}

void split(u64 m, std::vector<u64>& primes) {
  if (m == 1) return;
  if (is_prime(m)) {
    primes.push_back(m);
    return;
  }
  const u64 r = isqrt(m);
  if (r * r == m) {
    split(r, primes);
    split(r, primes);
    return;
  }
  const u64 f = find_factor(m);
  split(f, primes);
  split(m / f, primes);
}

}  // namespace

SigmaTable::SigmaTable(u64 lo, std::vector<u64> values) : lo_(lo), values_(std::move(values)) {
  if (lo_ == 0 || values_.empty()) throw InvalidRange("SigmaTable: empty table or lo = 0");
}

u64 SigmaTable::at(u64 n) const {
  if (!contains(n)) throw std::out_of_range("SigmaTable: n = " + std::to_string(n) + " not covered");
  return values_[n - lo_];
}

SigmaTable sieve_sigma(u64 lo, u64 hi) {
  if (lo == 0 || lo > hi) {
    throw InvalidRange("sieve_sigma: need 1 <= lo <= hi, got [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  if (hi > kSieveLimit) throw RangeTooLarge("sieve_sigma: hi exceeds 2^40");
  if (hi - lo >= kMaxSieveSpan) throw RangeTooLarge("sieve_sigma: span exceeds 2^28 entries");

  std::vector<u64> values(hi - lo + 1, 0);
  const u64 root = isqrt(hi);
  for (u64 d = 1; d <= root; ++d) {
    const u64 start = std::max(lo, d * d);
    u64 q = (start + d - 1) / d;
    for (u64 m = q * d; m <= hi; m += d, ++q) {
      u64& slot = values[m - lo];
      slot += d;
      if (q != d) slot += q;
    }
  }
  return SigmaTable(lo, std::move(values));
}

ReducedRatio reduce_ratio(u64 numerator, u64 denominator) {
  if (numerator == 0 || denominator == 0) throw std::invalid_argument("reduce_ratio: zero argument");
  const u64 g = std::gcd(numerator, denominator);
  return {numerator / g, denominator / g};
}

std::optional<u64> geometric_sum(u64 x, unsigned alpha, u64 cap) {
  if (x < 2) throw std::invalid_argument("geometric_sum: x must be >= 2");
  if (alpha < 1) throw std::invalid_argument("geometric_sum: alpha must be >= 1");
  // term <= sum <= cap < 2^64 on every pass, so term * x fits in 128 bits.
  u128 term = 1;
  u128 sum = 1;
  if (sum > cap) return std::nullopt;
  for (unsigned a = 1; a <= alpha; ++a) {
    term *= x;
    sum += term;
    if (sum > cap) return std::nullopt;
  }
  return static_cast<u64>(sum);
}

std::optional<u128> geometric_sum_wide(u64 x, unsigned alpha) {
  u128 sum = 1;
  u128 term = 1;
  for (unsigned a = 1; a <= alpha; ++a) {
    const auto next = checked_mul(term, x);
    if (!next || __builtin_add_overflow(sum, *next, &sum)) return std::nullopt;
    term = *next;
  }
  return sum;
}

bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (m % p == 0) return m == p;
  }
  if (m < 37 * 37) return true;

  u64 d = m - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set covering all m < 2^64.
  for (u64 a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    u64 x = powmod(a, d, m);
    if (x == 0 || x == 1 || x == m - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(u64 m) {
  if (m == 0) throw std::invalid_argument("factorize: m must be >= 1");
  std::vector<PrimePower> out;
  if ((m & 1) == 0) {
    const auto twos = static_cast<unsigned>(__builtin_ctzll(m));
    m >>= twos;
    out.push_back({2, twos});
  }
  for (const auto& [p, inverse, limit] : trial_primes()) {
    if (p * p > m) break;
    if (m * inverse > limit) continue;
    unsigned e = 0;
    while (m * inverse <= limit) {
      m *= inverse;  // exact division
      ++e;
    }
    out.push_back({p, e});
  }
  if (m == 1) return out;
  if (m < kTrialBound * kTrialBound) {
    out.push_back({m, 1});
    return out;
  }

  std::vector<u64> primes;
  split(m, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::string format_factorization(std::span<const PrimePower> factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

u128 divisor_sum(u64 m) {
  u128 sigma = 1;
  for (const auto& [p, e] : factorize(m)) {
    // sigma(p^e) = 1 + p + ... + p^e < 2p^e <= 2m, fits easily.
    u128 term = 1;
    u128 local = 1;
    for (unsigned i = 0; i < e; ++i) {
      term *= p;
      local += term;
    }
    const auto next = checked_mul(sigma, local);
    if (!next) throw std::overflow_error("divisor_sum: 128-bit overflow");
    sigma = *next;
  }
  return sigma;
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<u128> checked_mul(u128 a, u128 b) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

}  // namespace spoofperfect
