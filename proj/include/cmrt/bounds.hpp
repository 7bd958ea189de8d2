#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cmrt {

struct DiscriminantRow {
  std::int64_t h;
  std::int64_t abs_d;

  auto operator<=>(const DiscriminantRow&) const = default;
};

/// Fundamental discriminants -abs_d with their class numbers, sorted by
/// (h, abs_d). The list is complete for every h <= complete_through.
struct DiscriminantTable {
  std::vector<DiscriminantRow> rows;
  std::int64_t complete_through = 0;

  bool operator==(const DiscriminantTable&) const = default;
};

struct MaxDiscRow {
  std::int64_t h;
  std::int64_t max_abs_d;

  bool operator==(const MaxDiscRow&) const = default;
};

/// Largest |d_K| of each class number h = 1..100.
struct MaxDiscTable {
  std::vector<MaxDiscRow> rows;

  std::int64_t max_abs_d(std::int64_t h) const;
  bool operator==(const MaxDiscTable&) const = default;
};

inline constexpr std::int64_t kMaxTableClassNumber = 100;
inline constexpr std::int64_t kExactBoundMaxDegree = 7;

// CSV readers. Every row is re-verified with class_number(-abs_d) before the
// table is returned; any parse or verification failure throws data_error
// naming the source and line.
DiscriminantTable parse_table(std::istream& in, std::string_view source);
DiscriminantTable load_table(const std::filesystem::path& path);
std::string serialize_table(const DiscriminantTable& table);

MaxDiscTable parse_max_table(std::istream& in, std::string_view source);
MaxDiscTable load_max_table(const std::filesystem::path& path);
std::string serialize_max_table(const MaxDiscTable& table);

struct CompletenessReport {
  std::int64_t scan_limit;
  std::int64_t complete_through;
  std::int64_t fundamental_scanned;
  std::vector<std::int64_t> fields_per_h;  // index h, 0 unused
  std::string note;
};

/// Scans every fundamental -d with d <= scan_limit and checks that each field
/// with h <= complete_through is listed. Throws domain_error if scan_limit is
/// below the table's largest entry and data_error listing any omissions.
CompletenessReport verify_completeness(const DiscriminantTable& table, std::int64_t scan_limit);

/// Fields of class number h that exceed max_abs_d(h) or a row whose value is
/// not the largest found up to scan_limit; throws data_error on conflict.
void verify_max_table_against_scan(const MaxDiscTable& table, std::int64_t scan_limit);

enum class BoundMethod { Exact, Rough };

std::string_view to_string(BoundMethod m);

/// The bound comes from a prime dividing a listed discriminant.
struct DiscriminantWitness {
  std::int64_t prime;
  std::int64_t abs_d;
  std::int64_t h;
};

/// The bound comes from the clause ell <= 3n + 1 (or (w_K/2)n + 1).
struct SizeWitness {
  std::int64_t prime;
  std::int64_t limit;
};

/// Rough bound: the largest prime not exceeding the largest |d_K| with h <= n.
struct RoughWitness {
  std::int64_t prime;
  std::int64_t max_abs_d;
  std::int64_t h;
};

using BoundWitness = std::variant<DiscriminantWitness, SizeWitness, RoughWitness>;

struct BoundResult {
  std::int64_t n;
  std::int64_t c_n;
  BoundWitness witness;
  BoundMethod method;
};

struct BoundOptions {
  /// Use (w_K/2) n + 1 per listed field instead of the uniform 3n + 1.
  bool per_field_units = false;
};

BoundResult exact_bound(std::int64_t n, const DiscriminantTable& table, BoundOptions options = {});
BoundResult rough_bound(std::int64_t n, const MaxDiscTable& table);
std::vector<BoundResult> bound_table(std::int64_t n_max, const DiscriminantTable& table,
                                     BoundOptions options = {});

}  // namespace cmrt
