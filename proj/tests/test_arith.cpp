#include <doctest.h>

#include <cstdlib>

#include "cmrt/arith.hpp"
#include "cmrt/errors.hpp"
#include "oracles.hpp"

using namespace cmrt;

TEST_SUITE("arith") {

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-7, 2) == 1);
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(-7, 7) == 0);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-163, 2) == -1);
  // n = 0 and n = -1 conventions
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(kronecker(-5, -1) == -1);
  CHECK(kronecker(5, -1) == 1);
}

TEST_CASE("kronecker matches quadratic residues for odd primes up to 200") {
  const auto prime = oracle::sieve(200);
  for (std::int64_t p = 3; p <= 200; ++p) {
    if (!prime[p]) continue;
    for (std::int64_t a = -2 * p; a <= 2 * p; ++a) {
      CHECK_MESSAGE(kronecker(a, p) == oracle::legendre_by_squares(a, p), "a=", a, " p=", p);
    }
  }
}

TEST_CASE("kronecker is multiplicative in the top argument") {
  for (std::int64_t a = -100; a <= 100; ++a) {
    for (std::int64_t b = -100; b <= 100; b += 3) {
      for (std::int64_t n = -100; n <= 100; n += 7) {
        REQUIRE(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
      }
    }
  }
}

TEST_CASE("kronecker is multiplicative in the bottom argument and zero on shared factors") {
  for (std::int64_t a = -60; a <= 60; ++a) {
    for (std::int64_t m = 1; m <= 60; ++m) {
      for (std::int64_t n = -60; n <= 60; n += 5) {
        if (n == 0) continue;
        REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
      }
      const bool coprime = std::gcd(std::llabs(a), m) == 1;
      REQUIRE((kronecker(a, m) == 0) == !coprime);
    }
  }
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2383739));
  CHECK(is_prime(5923));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(2383747));
  // strong pseudoprimes: to bases 2, 3, 5, 7 and to every base up to 17
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(341550071728321ULL));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK(is_prime(999'999'999'989ULL));
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("is_prime agrees with a sieve up to 1e6") {
  const auto prime = oracle::sieve(1'000'000);
  for (std::int64_t n = 0; n <= 1'000'000; ++n) {
    REQUIRE_MESSAGE(is_prime(static_cast<std::uint64_t>(n)) == prime[n], "n=", n);
  }
}

TEST_CASE("factorize examples") {
  CHECK(factorize(427).factors == std::vector<PrimePower>{{7, 1}, {61, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(87808).factors == std::vector<PrimePower>{{2, 8}, {7, 3}});
  // beyond trial division: two primes above 1e6
  CHECK(factorize(1'000'003LL * 1'000'033LL).factors ==
        std::vector<PrimePower>{{1'000'003, 1}, {1'000'033, 1}});
  CHECK(factorize(999'999'999'989LL * 7).factors ==
        std::vector<PrimePower>{{7, 1}, {999'999'999'989LL, 1}});
  CHECK_THROWS_AS(factorize(0), domain_error);
}

TEST_CASE("factorize reassembles n and matches trial division up to 1e6") {
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    const FactoredInteger f = factorize(n);
    std::int64_t product = 1;
    std::int64_t previous = 1;
    for (const auto& [p, e] : f.factors) {
      REQUIRE(p > previous);
      REQUIRE(is_prime(static_cast<std::uint64_t>(p)));
      for (int i = 0; i < e; ++i) product *= p;
      previous = p;
    }
    REQUIRE(product == n);
    if (n % 997 == 0) {
      const auto expected = oracle::trial_division(n);
      REQUIRE(f.factors.size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(f.factors[i].prime == expected[i].first);
        CHECK(f.factors[i].exponent == expected[i].second);
      }
    }
  }
}

TEST_CASE("largest prime factor and largest prime at most") {
  CHECK(largest_prime_factor(163) == 163);
  CHECK(largest_prime_factor(427) == 61);
  // 2383747 = 251 * 9497
  CHECK(largest_prime_factor(2383747) == 9497);
  CHECK_THROWS_AS(largest_prime_factor(1), domain_error);

  CHECK(largest_prime_at_most(2383747) == 2383739);
  CHECK(largest_prime_at_most(4) == 3);
  CHECK(largest_prime_at_most(2) == 2);
  CHECK_THROWS_AS(largest_prime_at_most(1), domain_error);
}

TEST_CASE("fundamental discriminants") {
  CHECK(is_fundamental_discriminant(-163));
  CHECK_FALSE(is_fundamental_discriminant(-12));
  CHECK_FALSE(is_fundamental_discriminant(-28));
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(-8));
  CHECK_FALSE(is_fundamental_discriminant(-16));
  CHECK_FALSE(is_fundamental_discriminant(-5));
  CHECK_THROWS_AS(is_fundamental_discriminant(0), domain_error);
  CHECK_THROWS_AS(is_fundamental_discriminant(5), domain_error);
}

TEST_CASE("fundamental test agrees with descent definition") {
  for (std::int64_t d = -1; d >= -5000; --d) {
    REQUIRE_MESSAGE(is_fundamental_discriminant(d) == oracle::fundamental_by_descent(d), "d=", d);
  }
}

TEST_CASE("split_conductor recovers f^2 d_K") {
  CHECK(split_conductor(-28) == std::pair<std::int64_t, std::int64_t>{-7, 2});
  CHECK(split_conductor(-12) == std::pair<std::int64_t, std::int64_t>{-3, 2});
  CHECK(split_conductor(-16) == std::pair<std::int64_t, std::int64_t>{-4, 2});
  CHECK(split_conductor(-27) == std::pair<std::int64_t, std::int64_t>{-3, 3});
  CHECK(split_conductor(-163) == std::pair<std::int64_t, std::int64_t>{-163, 1});
  for (std::int64_t d = -3; d >= -3000; --d) {
    if (!oracle::is_discriminant(d)) continue;
    const auto [d_K, f] = split_conductor(d);
    REQUIRE(f * f * d_K == d);
    REQUIRE(oracle::fundamental_by_descent(d_K));
  }
  CHECK_THROWS_AS(split_conductor(-5), domain_error);
}

}
