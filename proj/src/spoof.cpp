#include "spoofperfect/spoof.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spoofperfect {

namespace {

template <typename T>
T binary_gcd(T a, T b) noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

// gcd(k, r) for 1 <= k <= kSmallK and 0 <= r < k, row k at offset k(k-1)/2.
constexpr std::uint32_t kSmallK = 1024;

const std::vector<std::uint16_t>& small_gcd_table() {
  static const std::vector<std::uint16_t> table = [] {
    std::vector<std::uint16_t> t(kSmallK * (kSmallK + 1) / 2);
    for (std::uint32_t k = 1; k <= kSmallK; ++k) {
      for (std::uint32_t r = 0; r < k; ++r) t[k * (k - 1) / 2 + r] = static_cast<std::uint16_t>(std::gcd(k, r));
    }
    return t;
  }();
  return table;
}

}  // namespace

Classification classify(u64 n, u64 x) {
  return {is_prime(x), std::gcd(n, x) == 1, (n & 1) == 1 && (x & 1) == 1};
}

SpoofNumber make_spoof(u64 n, u64 x, u64 k, unsigned alpha) {
  const u128 s = static_cast<u128>(n) * x;
  if (s > ~u64{0}) throw std::overflow_error("spoof number n * x exceeds 64 bits");
  const auto flags = classify(n, x);
  return {static_cast<u64>(s), n, x, k, alpha, flags.x_is_prime, flags.x_coprime_n, flags.s_odd};
}

std::vector<SpoofNumber> check_candidate(u64 n, u64 sigma_n, u64 k, unsigned alpha_max) {
  if (sigma_n == 0) throw std::invalid_argument("check_candidate: sigma_n must be positive");
  if (n < 2) throw std::invalid_argument("check_candidate: n must be >= 2");
  if (k < 2) throw std::invalid_argument("check_candidate: k must be >= 2");
  if (alpha_max < 1) throw std::invalid_argument("check_candidate: alpha_max must be >= 1");
  const u128 kn = static_cast<u128>(k) * n;
  if (kn > ~u64{0}) throw std::overflow_error("check_candidate: k * n exceeds 64 bits");

  const auto q = reduce_ratio(sigma_n, static_cast<u64>(kn));
  const auto num = q.num;
  const auto den = q.den;
  const __int128 delta = static_cast<__int128>(den) - static_cast<__int128>(num);
  if (num <= 1) return {};

  const u128 wide_cap = static_cast<u128>(den) + num;
  const u64 cap = wide_cap > ~u64{0} ? ~u64{0} : static_cast<u64>(wide_cap);
  for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
    const auto sum = geometric_sum(num, alpha, cap);
    if (!sum) break;
    if (delta == static_cast<__int128>(*sum) - static_cast<__int128>(num)) {
      return {make_spoof(n, num, k, alpha)};
    }
    // S_alpha only grows with alpha.
    if (*sum > den) break;
  }
  return {};
}

bool verify_spoof(const SpoofNumber& c) {
  if (c.n < 2 || c.x < 2 || c.k < 1 || c.alpha < 1) return false;
  if (static_cast<u128>(c.n) * c.x != c.s) return false;

  const u128 sigma = divisor_sum(c.n);

  u128 geometric = 0;
  for (unsigned a = 0; a <= c.alpha; ++a) {
    u128 power = 1;
    for (unsigned i = 0; i < a; ++i) {
      const auto next = checked_mul(power, c.x);
      if (!next) throw std::overflow_error("verify_spoof: x^alpha exceeds 128 bits");
      power = *next;
    }
    if (__builtin_add_overflow(geometric, power, &geometric)) {
      throw std::overflow_error("verify_spoof: S_alpha(x) exceeds 128 bits");
    }
  }

  const auto lhs = checked_mul(sigma, geometric);
  const auto kn = checked_mul(c.k, c.n);
  const auto rhs = kn ? checked_mul(*kn, c.x) : std::nullopt;
  if (!lhs || !rhs) throw std::overflow_error("verify_spoof: identity exceeds 128 bits");
  return *lhs == *rhs;
}

CandidateScanner::CandidateScanner(u64 n, u64 sigma_n, unsigned alpha_max) : alpha_max_(alpha_max) {
  if (n < 2 || sigma_n == 0) throw std::invalid_argument("CandidateScanner: need n >= 2, sigma_n > 0");
  if (alpha_max < 1) throw std::invalid_argument("CandidateScanner: alpha_max must be >= 1");
  const u64 g = std::gcd(sigma_n, n);
  sigma_part_ = sigma_n / g;
  n_part_ = n / g;
  first_viable_k_ = std::max<u64>(2, sigma_n / n + 1);
  narrow_ = sigma_part_ <= 0xffffffffu;
  gcd_table_ = small_gcd_table().data();
}

unsigned CandidateScanner::match(u64 k) const noexcept {
  // gcd(sigma, k n) = g * gcd(sigma', k) because gcd(sigma', n') = 1.
  u64 d;
  if (narrow_ && k <= kSmallK) {
    const auto k32 = static_cast<std::uint32_t>(k);
    const auto r = static_cast<std::uint32_t>(sigma_part_) % k32;
    d = gcd_table_[k32 * (k32 - 1) / 2 + r];
  } else {
    d = binary_gcd<u64>(k, sigma_part_ % k);
  }
  const u64 num = d == 1 ? sigma_part_ : sigma_part_ / d;
  if (num < 2) return 0;
  const u64 den = (d == 1 ? k : k / d) * n_part_;
  if (den <= num) return 0;
  if (den == num + 1) return 1;

  u128 sum = static_cast<u128>(num) + 1;
  for (unsigned alpha = 2; alpha <= alpha_max_; ++alpha) {
    sum = sum * num + 1;
    if (sum == den) return alpha;
    if (sum > den) return 0;
  }
  return 0;
}

}  // namespace spoofperfect
