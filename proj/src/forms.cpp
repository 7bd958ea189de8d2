#include "cmrt/forms.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "cmrt/arith.hpp"
#include "cmrt/errors.hpp"

namespace cmrt {

bool ReducedForm::is_reduced() const {
  if (a <= 0 || c <= 0) return false;
  if (!(std::abs(b) <= a && a <= c)) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

bool ReducedForm::is_primitive() const {
  return std::gcd(std::gcd(a, b), c) == 1;
}

std::vector<ReducedForm> enumerate_reduced_forms(std::int64_t d) {
  if (!is_negative_discriminant(d)) {
    throw domain_error("discriminant must be negative and 0 or 1 mod 4, got " +
                       std::to_string(d));
  }
  const std::int64_t abs_d = -d;
  std::vector<ReducedForm> forms;
  // a <= c and |b| <= a give 3a^2 <= |d|.
  for (std::int64_t a = 1; 3 * a * a <= abs_d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const ReducedForm form{a, b, num / (4 * a)};
      if (form.c < a || (form.c == a && b < 0)) continue;
      if (!form.is_primitive()) continue;
      forms.push_back(form);
    }
  }
  // Loop order already yields (a, b) ascending, and c is determined by them.
  return forms;
}

std::int64_t class_number(std::int64_t d) {
  return static_cast<std::int64_t>(enumerate_reduced_forms(d).size());
}

FundamentalClassNumbers::FundamentalClassNumbers(std::int64_t limit)
    : limit_(limit), counts_(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0) + 1), 0) {
  if (limit < 3) throw domain_error("scan limit must be at least 3");
  // Every form of fundamental discriminant is primitive, so counting all
  // reduced forms gives h exactly on the entries we keep.
  for (std::int64_t a = 1; 3 * a * a <= limit; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t first_c = (b < 0) ? a + 1 : a;
      for (std::int64_t disc = 4 * a * first_c - b * b; disc <= limit; disc += 4 * a) {
        ++counts_[static_cast<std::size_t>(disc)];
      }
    }
  }
  std::vector<bool> squarefree(counts_.size(), true);
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    for (std::int64_t k = p * p; k <= limit; k += p * p) squarefree[k] = false;
  }
  // -D fundamental: D = 3 mod 4 squarefree, or D = 4m with m = 1, 2 mod 4 squarefree.
  for (std::int64_t abs_d = 0; abs_d <= limit; ++abs_d) {
    bool fundamental = false;
    if (abs_d % 4 == 3) {
      fundamental = squarefree[abs_d];
    } else if (abs_d % 4 == 0 && abs_d > 0) {
      const std::int64_t m = abs_d / 4;
      fundamental = (m % 4 == 1 || m % 4 == 2) && squarefree[m];
    }
    if (!fundamental) counts_[abs_d] = 0;
  }
}

std::vector<std::int64_t> FundamentalClassNumbers::discriminants() const {
  std::vector<std::int64_t> out;
  for (std::int64_t abs_d = 3; abs_d <= limit_; ++abs_d) {
    if (counts_[abs_d] != 0) out.push_back(abs_d);
  }
  return out;
}

}  // namespace cmrt
