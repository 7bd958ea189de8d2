#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cmrt/curves.hpp"
#include "cmrt/errors.hpp"
#include "cmrt/forms.hpp"

namespace cmrt {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

constexpr int kDigits = 100;
constexpr int kMinTerms = 25;
constexpr int kMaxTerms = 150;

std::vector<Integer> multiply(const std::vector<Integer>& x, const std::vector<Integer>& y,
                              std::size_t n) {
  std::vector<Integer> out(n, 0);
  for (std::size_t i = 0; i < n && i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; i + k < n && k < y.size(); ++k) out[i + k] += x[i] * y[k];
  }
  return out;
}

const std::vector<Integer>& coefficient_table() {
  static const std::vector<Integer> table = j_coefficients(kMaxTerms);
  return table;
}

}  // namespace

std::vector<Integer> j_coefficients(int count) {
  if (count < 1) return {};
  const auto n = static_cast<std::size_t>(count);

  // E4 = 1 + 240 sum sigma_3(k) q^k
  std::vector<Integer> e4(n, 0);
  e4[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Integer sigma = 0;
    for (std::size_t d = 1; d <= k; ++d) {
      if (k % d == 0) sigma += Integer(d) * d * d;
    }
    e4[k] = 240 * sigma;
  }

  // prod (1 - q^k)^24, i.e. Delta / q
  std::vector<Integer> eta24(n, 0);
  eta24[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = n - 1; i >= k; --i) eta24[i] -= eta24[i - k];
    }
  }

  // Leading coefficient 1, so the inverse series stays integral.
  std::vector<Integer> inverse(n, 0);
  inverse[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += eta24[i] * inverse[k - i];
    inverse[k] = -acc;
  }

  const std::vector<Integer> e4_cubed = multiply(multiply(e4, e4, n), e4, n);
  return multiply(e4_cubed, inverse, n);
}

CmJEvaluation evaluate_cm_j(std::int64_t order_disc) {
  const std::vector<ReducedForm> forms = enumerate_reduced_forms(order_disc);
  if (forms.size() != 1) {
    throw domain_error("discriminant " + std::to_string(order_disc) + " has class number " +
                       std::to_string(forms.size()) + ", not 1");
  }
  const ReducedForm& principal = forms.front();  // (1, b, c) with b in {0, 1}

  // tau = (-b + i sqrt|d|)/2, so q = e^{2 pi i tau} = (-1)^b e^{-pi sqrt|d|} is real.
  Real q = exp(-boost::math::constants::pi<Real>() * sqrt(Real(-order_disc)));
  if (principal.b % 2 != 0) q = -q;

  const std::vector<Integer>& coeffs = coefficient_table();
  const Real tolerance = Real(10) / pow(Real(10), kDigits - 10);
  Real sum = 0;
  Real q_power = 1 / q;  // q^-1
  int terms = 0;
  for (const Integer& c : coeffs) {
    const Real term = Real(c) * q_power;
    sum += term;
    ++terms;
    if (terms >= kMinTerms && abs(term) < tolerance) break;
    q_power *= q;
  }
  if (terms == static_cast<int>(coeffs.size())) {
    throw internal_error("q-expansion did not converge for d = " + std::to_string(order_disc));
  }

  const Real nearest = round(sum);
  const double distance = static_cast<double>(abs(sum - nearest));
  if (!(distance < 0.25)) {
    throw internal_error("j(tau) for d = " + std::to_string(order_disc) +
                         " is not within 0.25 of an integer");
  }
  return CmJEvaluation{order_disc, Integer(nearest), distance, terms, kDigits};
}

Integer cm_j_value(std::int64_t order_disc) {
  return evaluate_cm_j(order_disc).value;
}

const std::vector<std::int64_t>& class_number_one_discriminants() {
  static const std::vector<std::int64_t> discs = [] {
    std::vector<std::int64_t> out;
    for (std::int64_t d = -3; d >= -200; --d) {
      if (is_negative_discriminant(d) && class_number(d) == 1) out.push_back(d);
    }
    return out;
  }();
  return discs;
}

std::optional<CmIdentification> identify_cm(const Rational& j) {
  struct Entry {
    std::int64_t disc;
    Integer j;
  };
  static const std::vector<Entry> table = [] {
    std::vector<Entry> out;
    for (std::int64_t d : class_number_one_discriminants()) out.push_back({d, cm_j_value(d)});
    return out;
  }();

  if (denominator(j) != 1) return std::nullopt;
  for (const Entry& e : table) {
    if (e.j == numerator(j)) {
      const auto [d_K, f] = split_conductor(e.disc);
      return CmIdentification{d_K, f, e.disc};
    }
  }
  return std::nullopt;
}

}  // namespace cmrt
