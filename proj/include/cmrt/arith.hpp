#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmrt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
  std::int64_t prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

/// |value| = prod prime^exponent, primes strictly increasing.
struct FactoredInteger {
  std::int64_t value = 1;
  std::vector<PrimePower> factors;

  std::int64_t largest_prime() const;
};

/// Kronecker symbol (a/n) with the full extension to even, zero and
/// negative n.
int kronecker(std::int64_t a, std::int64_t n);

/// Deterministic Miller-Rabin. Witnesses {2..17} below 3.4e14, the first
/// twelve primes beyond that, which covers every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division to 1e6, then Brent's variant of Pollard rho.
FactoredInteger factorize(std::int64_t n);

std::int64_t largest_prime_factor(std::int64_t n);
std::int64_t largest_prime_at_most(std::int64_t x);

bool is_squarefree(std::int64_t n);

/// d < 0 only; throws domain_error otherwise.
bool is_fundamental_discriminant(std::int64_t d);

/// True for d < 0 with d = 0 or 1 mod 4.
bool is_negative_discriminant(std::int64_t d);

/// Writes d = f^2 d_K with d_K fundamental. Requires a negative
/// discriminant.
std::pair<std::int64_t, std::int64_t> split_conductor(std::int64_t d);

/// Mathematical mod, result in [0, m).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace cmrt
