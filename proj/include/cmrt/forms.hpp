#pragma once

#include <cstdint>
#include <vector>

namespace cmrt {

/// Positive definite binary quadratic form a x^2 + b xy + c y^2.
struct ReducedForm {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;
  bool is_primitive() const;

  auto operator<=>(const ReducedForm&) const = default;
};

/// All reduced primitive forms of discriminant d, sorted by (a, b, c).
/// Throws domain_error unless d < 0 and d = 0, 1 mod 4.
std::vector<ReducedForm> enumerate_reduced_forms(std::int64_t d);

/// h(d): the number of reduced primitive forms. For non-fundamental d this
/// is the class number of the order of discriminant d.
std::int64_t class_number(std::int64_t d);

/// Class numbers of every fundamental discriminant -D with 3 <= D <= limit,
/// computed in one pass over all reduced forms with 4ac - b^2 <= limit.
/// Entry D holds h(-D) when -D is fundamental and 0 otherwise.
class FundamentalClassNumbers {
 public:
  explicit FundamentalClassNumbers(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  bool is_fundamental(std::int64_t abs_d) const { return counts_.at(abs_d) != 0; }
  int class_number(std::int64_t abs_d) const { return counts_.at(abs_d); }

  /// Fundamental |d| <= limit in increasing order.
  std::vector<std::int64_t> discriminants() const;

 private:
  std::int64_t limit_;
  std::vector<int> counts_;
};

}  // namespace cmrt
