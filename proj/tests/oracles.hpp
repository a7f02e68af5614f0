// Slow reference computations used to check the fast paths. Nothing here
// calls into the library's sieve, scanner or candidate test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Sum of divisors by trial division.
inline u64 sigma(u64 n) {
  u64 total = 0;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += d;
    if (d != n / d) total += n / d;
  }
  return total;
}

inline bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

/// Every (x, k, alpha) with sigma(n) S_alpha(x) = k n x, 2 <= k <= k_max,
/// 1 <= alpha <= alpha_max, found by enumerating x directly.
///
/// Bound on x: alpha = 1 forces x (k n - sigma) = sigma, so x <= sigma;
/// alpha >= 2 gives x^2 < S_alpha(x) = k n x / sigma, so x < k n / sigma.
inline std::vector<std::tuple<u64, u64, unsigned>> brute_force_spoofs(u64 n, u64 k_max, unsigned alpha_max) {
  const u64 s = sigma(n);
  std::vector<std::tuple<u64, u64, unsigned>> hits;
  for (u64 k = 2; k <= k_max; ++k) {
    for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
      const u64 x_bound = alpha == 1 ? s : k * n / s + 1;
      for (u64 x = 2; x <= x_bound; ++x) {
        u128 sum = 1, term = 1;
        bool too_big = false;
        for (unsigned a = 1; a <= alpha; ++a) {
          term *= x;
          sum += term;
          if (sum > (u128{1} << 100)) {
            too_big = true;
            break;
          }
        }
        if (too_big) break;
        if (static_cast<u128>(s) * sum == static_cast<u128>(k) * n * x) hits.emplace_back(x, k, alpha);
      }
    }
  }
  return hits;
}

}  // namespace oracle
