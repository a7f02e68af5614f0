#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spoofperfect/arithmetic.hpp"

using namespace spoofperfect;

TEST_CASE("sieve_sigma small values") {
  const auto table = sieve_sigma(1, 10);
  const std::vector<u64> expected = {1, 3, 4, 7, 6, 12, 8, 15, 13, 18};
  CHECK(std::vector<u64>(table.values().begin(), table.values().end()) == expected);
  CHECK(table.lo() == 1);
  CHECK(table.hi() == 10);
}

TEST_CASE("sieve_sigma single points") {
  CHECK(sieve_sigma(5, 5)[5] == 6);
  // 60515 = 5 * 7^2 * 13 * 19; (1+5)(1+7+49)(1+13)(1+19) = 95760
  CHECK(sieve_sigma(60515, 60515)[60515] == 95760);
  CHECK(sieve_sigma(1, 1)[1] == 1);
}

TEST_CASE("sieve_sigma matches trial division on segments") {
  for (u64 lo : {1ull, 2ull, 97ull, 1000ull, 4096ull, 9999ull}) {
    const u64 hi = std::min<u64>(lo + 777, 10'000);
    const auto table = sieve_sigma(lo, hi);
    for (u64 n = lo; n <= hi; ++n) REQUIRE(table[n] == oracle::sigma(n));
  }
  // A segment far from the origin exercises the d*d > lo start offset.
  const u64 lo = 1'000'000'007;
  const auto table = sieve_sigma(lo, lo + 500);
  for (u64 n = lo; n <= lo + 500; ++n) REQUIRE(table[n] == oracle::sigma(n));
}

TEST_CASE("sieve_sigma structural invariants") {
  const auto table = sieve_sigma(2, 5000);
  for (u64 n = 2; n <= 5000; ++n) {
    CHECK(table[n] >= n + 1);
    CHECK((table[n] == n + 1) == oracle::is_prime(n));
  }
}

TEST_CASE("sieve_sigma errors") {
  CHECK_THROWS_AS(sieve_sigma(0, 10), InvalidRange);
  CHECK_THROWS_AS(sieve_sigma(11, 10), InvalidRange);
  CHECK_THROWS_AS(sieve_sigma(kSieveLimit, kSieveLimit + 1), RangeTooLarge);
  CHECK_THROWS_AS(sieve_sigma(1, kMaxSieveSpan + 1), RangeTooLarge);
  CHECK_NOTHROW(sieve_sigma(kSieveLimit - 10, kSieveLimit));
  CHECK_THROWS_AS(sieve_sigma(1, 10).at(11), std::out_of_range);
}

TEST_CASE("reduce_ratio") {
  CHECK(reduce_ratio(6, 80) == ReducedRatio{3, 40});
  CHECK(reduce_ratio(7, 7) == ReducedRatio{1, 1});
  CHECK(reduce_ratio(233142, 98 * 147537) == ReducedRatio{61, 3783});
  CHECK_THROWS_AS(reduce_ratio(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(reduce_ratio(5, 0), std::invalid_argument);
}

TEST_CASE("reduce_ratio postcondition on random input") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10'000; ++i) {
    const u64 g = rng() % 1000 + 1;
    const u64 a = (rng() % (u64{1} << 40) + 1) * g;
    const u64 b = (rng() % (u64{1} << 40) + 1) * g;
    const auto r = reduce_ratio(a, b);
    REQUIRE(std::gcd(r.num, r.den) == 1);
    const u64 whole = a / r.num;
    REQUIRE(r.num * whole == a);
    REQUIRE(r.den * whole == b);
  }
}

TEST_CASE("geometric_sum") {
  CHECK(geometric_sum(3, 3, 1'000'000) == 40u);
  CHECK(geometric_sum(61, 2, 1'000'000) == 3783u);
  CHECK(geometric_sum(3, 4, 1'000'000) == 121u);
  CHECK(geometric_sum(3, 5, 1'000'000) == 364u);
  for (u64 x : {2ull, 17ull, 22021ull, 1ull << 40}) CHECK(geometric_sum(x, 1, ~u64{0}) == x + 1);
  CHECK_FALSE(geometric_sum(1'000'000, 10, 1'000'000'000).has_value());
  CHECK_FALSE(geometric_sum(3, 3, 39).has_value());
  CHECK(geometric_sum(3, 3, 40) == 40u);
  // 2^64 - 1 = 1 + 2 + ... + 2^63 fits exactly at the maximal cap.
  CHECK(geometric_sum(2, 63, ~u64{0}) == ~u64{0});
  CHECK_FALSE(geometric_sum(2, 64, ~u64{0}).has_value());
  CHECK_THROWS_AS(geometric_sum(1, 3, 100), std::invalid_argument);
  CHECK_THROWS_AS(geometric_sum(3, 0, 100), std::invalid_argument);
}

TEST_CASE("geometric_sum_wide") {
  CHECK(geometric_sum_wide(22021, 1) == u128{22022});
  CHECK(geometric_sum_wide(2, 127) == ~u128{0});
  CHECK_FALSE(geometric_sum_wide(2, 128).has_value());
}

TEST_CASE("is_prime") {
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(22021));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551555ull));
  CHECK_FALSE(is_prime(3215031751ull));        // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ull));  // strong pseudoprime to the first nine prime bases
  CHECK_FALSE(is_prime(4294967297ull));        // 641 * 6700417
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
  std::vector<bool> composite(1'000'001, false);
  composite[0] = composite[1] = true;
  for (u64 p = 2; p * p <= 1'000'000; ++p) {
    if (composite[p]) continue;
    for (u64 m = p * p; m <= 1'000'000; m += p) composite[m] = true;
  }
  for (u64 m = 0; m <= 1'000'000; ++m) REQUIRE(is_prime(m) == !composite[m]);
}

TEST_CASE("factorize") {
  CHECK(factorize(181545) == std::vector<PrimePower>{{3, 1}, {5, 1}, {7, 2}, {13, 1}, {19, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(22021) == std::vector<PrimePower>{{19, 2}, {61, 1}});
  CHECK(factorize(9018009) == std::vector<PrimePower>{{3, 2}, {7, 2}, {11, 2}, {13, 2}});
  CHECK(format_factorization(factorize(22021)) == "19^2*61");
  CHECK(format_factorization(factorize(1)) == "1");
  // Two primes just above the trial-division bound.
  const u64 p = 1048583, q = 1048589;
  CHECK(factorize(p * q) == std::vector<PrimePower>{{p, 1}, {q, 1}});
  CHECK(factorize(p * p) == std::vector<PrimePower>{{p, 2}});
  CHECK(factorize(4294967291ull * 4294967279ull) == std::vector<PrimePower>{{4294967279ull, 1}, {4294967291ull, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize recomposes random 64-bit inputs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10'000; ++i) {
    const u64 m = rng() | 1;  // odd keeps the cofactors large
    const u64 value = i % 2 == 0 ? m : rng();
    if (value == 0) continue;
    const auto factors = factorize(value);
    u128 product = 1;
    u64 previous = 0;
    for (const auto& [prime, exponent] : factors) {
      REQUIRE(prime > previous);
      REQUIRE(is_prime(prime));
      previous = prime;
      for (unsigned e = 0; e < exponent; ++e) product *= prime;
    }
    REQUIRE(product == value);
  }
}

TEST_CASE("divisor_sum agrees with trial division") {
  for (u64 n = 1; n <= 3000; ++n) REQUIRE(divisor_sum(n) == oracle::sigma(n));
  CHECK(divisor_sum(147537) == 233142);
}

TEST_CASE("to_string for 128-bit values") {
  CHECK(to_string(0) == "0");
  CHECK(to_string(~u128{0}) == "340282366920938463463374607431768211455");
}
