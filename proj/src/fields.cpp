#include "cmrt/fields.hpp"

#include <string>

#include "cmrt/arith.hpp"
#include "cmrt/errors.hpp"
#include "cmrt/forms.hpp"

namespace cmrt {

namespace {

void require_fundamental(std::int64_t d_K) {
  if (d_K >= 0 || !is_fundamental_discriminant(d_K)) {
    throw domain_error("not a negative fundamental discriminant: " + std::to_string(d_K));
  }
}

}  // namespace

QuadField make_field(std::int64_t d_K) {
  require_fundamental(d_K);
  return QuadField{d_K, class_number(d_K), count_units(d_K)};
}

QuadOrder make_order(std::int64_t d_K, std::int64_t f) {
  if (f < 1) throw domain_error("conductor must be positive, got " + std::to_string(f));
  const QuadField field = make_field(d_K);
  const std::int64_t disc = f * f * d_K;
  return QuadOrder{field, f, disc, class_number(disc), f == 1 ? field.w_K : 2};
}

std::int64_t norm_form(std::int64_t d, std::int64_t x, std::int64_t y) {
  if (mod_floor(d, 4) == 1) return x * x + x * y + ((1 - d) / 4) * y * y;
  return x * x - (d / 4) * y * y;
}

int count_units(std::int64_t d) {
  if (!is_negative_discriminant(d)) {
    throw domain_error("not a negative discriminant: " + std::to_string(d));
  }
  // The norm form is positive definite with y-coefficient >= 1, so any
  // unit has |x|, |y| <= 2.
  int count = 0;
  for (std::int64_t x = -2; x <= 2; ++x) {
    for (std::int64_t y = -2; y <= 2; ++y) {
      if (norm_form(d, x, y) == 1) ++count;
    }
  }
  return count;
}

int roots_of_unity(std::int64_t d_K) {
  if (d_K == -3) return 6;
  if (d_K == -4) return 4;
  return 2;
}

std::int64_t order_unit_index(const QuadField& field, std::int64_t f) {
  return f > 1 ? field.w_K / 2 : 1;
}

std::int64_t order_class_number(std::int64_t d_K, std::int64_t f) {
  require_fundamental(d_K);
  if (f < 1) throw domain_error("conductor must be positive, got " + std::to_string(f));
  const QuadField field = make_field(d_K);
  std::int64_t numerator = field.h_K;
  for (const auto& [p, e] : factorize(f).factors) {
    for (int i = 1; i < e; ++i) numerator *= p;
    numerator *= p - kronecker(d_K, p);
  }
  const std::int64_t index = order_unit_index(field, f);
  if (numerator % index != 0) {
    throw internal_error("order class number formula not integral at d_K = " +
                         std::to_string(d_K) + ", f = " + std::to_string(f));
  }
  return numerator / index;
}

std::int64_t max_conductor_prime_bound(std::int64_t n, int w_K) {
  if (n < 1) throw domain_error("degree must be positive");
  if (w_K != 2 && w_K != 4 && w_K != 6) throw domain_error("w_K must be 2, 4 or 6");
  return (w_K / 2) * n + 1;
}

}  // namespace cmrt
