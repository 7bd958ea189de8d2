#pragma once

#include <cstdint>

namespace cmrt {

/// Imaginary quadratic field K of fundamental discriminant d_K.
struct QuadField {
  std::int64_t d_K;
  std::int64_t h_K;  // class number
  int w_K;           // number of roots of unity: 6, 4 or 2

  bool operator==(const QuadField&) const = default;
};

/// The order Z + f O_K.
struct QuadOrder {
  QuadField field;
  std::int64_t f;
  std::int64_t disc;  // f^2 d_K
  std::int64_t h;
  int w;

  bool operator==(const QuadOrder&) const = default;
};

/// Throws domain_error unless d_K is a negative fundamental discriminant.
QuadField make_field(std::int64_t d_K);

QuadOrder make_order(std::int64_t d_K, std::int64_t f);

/// Norm form of the order of discriminant d in the basis {1, w} with
/// w = (1 + sqrt d)/2 for d = 1 mod 4 and w = sqrt(d/4) for d = 0 mod 4.
std::int64_t norm_form(std::int64_t d, std::int64_t x, std::int64_t y);

/// Number of (x, y) with norm_form(d, x, y) = 1, found by search.
int count_units(std::int64_t d);

/// w_K from the closed-form case split.
int roots_of_unity(std::int64_t d_K);

/// [O_K^x : O_f^x]: w_K/2 when f > 1, else 1.
std::int64_t order_unit_index(const QuadField& field, std::int64_t f);

/// h(O_f) = h_K f prod_{p|f} (1 - (d_K/p)/p) / [O_K^x : O_f^x].
/// Throws internal_error if the final division is inexact.
std::int64_t order_class_number(std::int64_t d_K, std::int64_t f);

/// (w_K/2) n + 1: the largest prime that can divide the conductor of an
/// order whose class number is at most n.
std::int64_t max_conductor_prime_bound(std::int64_t n, int w_K);

}  // namespace cmrt
