#pragma once

#include <cstdint>
#include <string_view>

#include "cmrt/fields.hpp"

namespace cmrt {

enum class SplitType { Split, Inert, Ramified };

std::string_view to_string(SplitType type);

/// Ray class group data for the modulus m = ell O_K.
struct RayClassReport {
  QuadField field;
  std::int64_t ell;
  SplitType split_type;
  std::int64_t unit_index;          // [U : U_m]
  std::int64_t residue_unit_order;  // |(O_K / ell O_K)^x|
  std::int64_t h_m;
};

/// Every operation below rejects ell unless it is an odd prime; ell = 2
/// needs a unit-index analysis this library does not attempt.
void require_odd_prime(std::int64_t ell);

SplitType split_type(std::int64_t d_K, std::int64_t ell);

/// [U : U_m] for m = ell O_K. No root of unity other than 1 is congruent to
/// 1 mod an odd ell, so this is w_K.
std::int64_t unit_index(const QuadField& field, std::int64_t ell);

/// Lists the w_K units x + y w and counts those = 1 mod ell O_K.
std::int64_t unit_index_oracle(const QuadField& field, std::int64_t ell);

/// |(O_K / ell O_K)^x| from the splitting type.
std::int64_t residue_unit_order(std::int64_t d_K, std::int64_t ell);

/// Counts the ell^2 residues x + y w whose norm is prime to ell.
std::int64_t residue_unit_order_oracle(std::int64_t d_K, std::int64_t ell);

/// h_m via the split/inert/ramified specialisation:
/// h_K [U:U_m]^-1 (ell-1)^2, (ell+1)(ell-1) or ell(ell-1).
RayClassReport ray_class_number(const QuadField& field, std::int64_t ell);

/// h_m = h_K [U:U_m]^-1 N(m) prod_{p | m} (1 - N(p)^-1), evaluated in exact
/// rationals over the prime ideals above ell.
std::int64_t ray_class_number_general(const QuadField& field, std::int64_t ell);

}  // namespace cmrt
