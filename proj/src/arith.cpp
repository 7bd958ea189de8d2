#include "cmrt/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "cmrt/errors.hpp"

namespace cmrt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// (2/n) for odd n, indexed by n mod 8.
constexpr std::array<int, 8> kTwoTable = {0, 1, 0, -1, 0, -1, 0, 1};

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool strong_probable_prime(u64 n, u64 witness) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(witness, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::int64_t kTrialLimit = 1'000'000;

// Brent's cycle-finding variant. n must be an odd composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 block = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::map<std::int64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[static_cast<std::int64_t>(n)];
    return;
  }
  const u64 d = pollard_brent(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

std::int64_t FactoredInteger::largest_prime() const {
  if (factors.empty()) throw domain_error("no prime factors");
  return factors.back().prime;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;

  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  int k = (v % 2 == 0) ? 1 : kTwoTable[mod_floor(a, 8)];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }

  // n is now odd and positive.
  while (true) {
    if (a == 0) return n > 1 ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) k *= kTwoTable[n & 7];
    if (mod_floor(a, 4) == 3 && (n & 3) == 3) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = n % r;
    n = r;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  const std::size_t count = n < 341'550'071'728'321ULL ? 7 : kWitnesses.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (!strong_probable_prime(n, kWitnesses[i])) return false;
  }
  return true;
}

FactoredInteger factorize(std::int64_t n) {
  if (n < 1) throw domain_error("factorize requires n >= 1, got " + std::to_string(n));
  FactoredInteger result;
  result.value = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p <= kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (m > 1) {
    std::map<std::int64_t, int> rest;
    split_into(static_cast<u64>(m), rest);
    for (const auto& [p, e] : rest) result.factors.push_back({p, e});
  }
  return result;
}

std::int64_t largest_prime_factor(std::int64_t n) {
  if (n < 2) throw domain_error("largest_prime_factor requires n >= 2, got " + std::to_string(n));
  return factorize(n).largest_prime();
}

std::int64_t largest_prime_at_most(std::int64_t x) {
  if (x < 2) throw domain_error("largest_prime_at_most requires x >= 2, got " + std::to_string(x));
  while (!is_prime(static_cast<u64>(x))) --x;
  return x;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& pe : factorize(std::llabs(n)).factors) {
    if (pe.exponent > 1) return false;
  }
  return true;
}

bool is_negative_discriminant(std::int64_t d) {
  return d < 0 && (mod_floor(d, 4) == 0 || mod_floor(d, 4) == 1);
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d >= 0) {
    throw domain_error("discriminant must be negative, got " + std::to_string(d));
  }
  switch (mod_floor(d, 4)) {
    case 1:
      return is_squarefree(d);
    case 0: {
      const std::int64_t m = d / 4;
      const std::int64_t r = mod_floor(m, 4);
      return (r == 2 || r == 3) && is_squarefree(m);
    }
    default:
      return false;
  }
}

std::pair<std::int64_t, std::int64_t> split_conductor(std::int64_t d) {
  if (!is_negative_discriminant(d)) {
    throw domain_error("not a negative discriminant: " + std::to_string(d));
  }
  std::int64_t square_root = 1;
  for (const auto& [p, e] : factorize(-d).factors) {
    for (int i = 0; i < e / 2; ++i) square_root *= p;
  }
  const std::int64_t core = d / (square_root * square_root);
  if (mod_floor(core, 4) == 1) return {core, square_root};
  return {4 * core, square_root / 2};
}

}  // namespace cmrt
