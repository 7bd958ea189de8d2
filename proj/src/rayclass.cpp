#include "cmrt/rayclass.hpp"

#include <string>
#include <vector>

#include "cmrt/arith.hpp"
#include "cmrt/errors.hpp"

namespace cmrt {

std::string_view to_string(SplitType type) {
  switch (type) {
    case SplitType::Split:
      return "Split";
    case SplitType::Inert:
      return "Inert";
    case SplitType::Ramified:
      return "Ramified";
  }
  return "?";
}

void require_odd_prime(std::int64_t ell) {
  if (ell < 3 || !is_prime(static_cast<std::uint64_t>(ell))) {
    throw domain_error("ell must be an odd prime");
  }
}

namespace {

void require_fundamental(std::int64_t d_K) {
  if (d_K >= 0 || !is_fundamental_discriminant(d_K)) {
    throw domain_error("not a negative fundamental discriminant: " + std::to_string(d_K));
  }
}

std::int64_t checked_divide(std::int64_t num, std::int64_t den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw internal_error(std::string(what) + ": " + std::to_string(num) +
                         " not divisible by " + std::to_string(den));
  }
  return num / den;
}

}  // namespace

SplitType split_type(std::int64_t d_K, std::int64_t ell) {
  require_odd_prime(ell);
  require_fundamental(d_K);
  switch (kronecker(d_K, ell)) {
    case 1:
      return SplitType::Split;
    case -1:
      return SplitType::Inert;
    default:
      return SplitType::Ramified;
  }
}

std::int64_t unit_index(const QuadField& field, std::int64_t ell) {
  require_odd_prime(ell);
  return field.w_K;
}

std::int64_t unit_index_oracle(const QuadField& field, std::int64_t ell) {
  require_odd_prime(ell);
  std::int64_t units = 0;
  std::int64_t trivial_mod_ell = 0;
  for (std::int64_t x = -2; x <= 2; ++x) {
    for (std::int64_t y = -2; y <= 2; ++y) {
      if (norm_form(field.d_K, x, y) != 1) continue;
      ++units;
      // x + y w = 1 mod ell O_K  iff  ell | x - 1 and ell | y.
      if (mod_floor(x - 1, ell) == 0 && mod_floor(y, ell) == 0) ++trivial_mod_ell;
    }
  }
  if (units != field.w_K) {
    throw internal_error("unit search found " + std::to_string(units) + " units, expected " +
                         std::to_string(field.w_K));
  }
  return checked_divide(units, trivial_mod_ell, "unit index");
}

std::int64_t residue_unit_order(std::int64_t d_K, std::int64_t ell) {
  switch (split_type(d_K, ell)) {
    case SplitType::Split:
      return (ell - 1) * (ell - 1);
    case SplitType::Inert:
      return (ell + 1) * (ell - 1);
    case SplitType::Ramified:
      return ell * (ell - 1);
  }
  return 0;
}

std::int64_t residue_unit_order_oracle(std::int64_t d_K, std::int64_t ell) {
  require_odd_prime(ell);
  require_fundamental(d_K);
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < ell; ++x) {
    for (std::int64_t y = 0; y < ell; ++y) {
      if (mod_floor(norm_form(d_K, x, y), ell) != 0) ++count;
    }
  }
  return count;
}

RayClassReport ray_class_number(const QuadField& field, std::int64_t ell) {
  RayClassReport report{field, ell, split_type(field.d_K, ell), unit_index(field, ell), 0, 0};
  report.residue_unit_order = residue_unit_order(field.d_K, ell);
  report.h_m = checked_divide(field.h_K * report.residue_unit_order, report.unit_index,
                              "ray class number");
  return report;
}

std::int64_t ray_class_number_general(const QuadField& field, std::int64_t ell) {
  // Norms of the prime ideals dividing ell O_K.
  std::vector<std::int64_t> prime_norms;
  switch (split_type(field.d_K, ell)) {
    case SplitType::Split:
      prime_norms = {ell, ell};
      break;
    case SplitType::Inert:
      prime_norms = {ell * ell};
      break;
    case SplitType::Ramified:
      prime_norms = {ell};
      break;
  }
  Rational h = Rational(field.h_K) / unit_index(field, ell) * (ell * ell);
  for (std::int64_t norm : prime_norms) h *= 1 - Rational(1, norm);
  if (denominator(h) != 1) {
    throw internal_error("general ray class formula is not integral at d_K = " +
                         std::to_string(field.d_K) + ", ell = " + std::to_string(ell));
  }
  return static_cast<std::int64_t>(numerator(h));
}

}  // namespace cmrt
