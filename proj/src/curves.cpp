#include "cmrt/curves.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>
#include <utility>

#include "cmrt/errors.hpp"
#include "cmrt/rayclass.hpp"

namespace cmrt {

namespace {

bool is_perfect_square(const Integer& m) {
  if (m < 0) return false;
  const Integer r = boost::multiprecision::sqrt(m);
  return r * r == m;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Integer roots of a monotone f on [lo, hi], found by bisection.
template <class F>
void monotone_integer_root(const F& f, Integer lo, Integer hi, std::vector<Integer>& roots) {
  if (lo > hi) return;
  const int s_lo = sign(f(lo));
  const int s_hi = sign(f(hi));
  if (s_lo == 0) roots.push_back(lo);
  if (s_hi == 0 && hi != lo) roots.push_back(hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) return;
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    const int s_mid = sign(f(mid));
    if (s_mid == 0) {
      roots.push_back(mid);
      return;
    }
    (s_mid == s_lo ? lo : hi) = mid;
  }
}

}  // namespace

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw domain_error("expected a rational p/q or an integer, got '" + std::string(text) + "'");
  }
  const Integer d(std::string{den});
  if (d == 0) throw domain_error("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(std::string{num}), d);
  return negative ? Rational(-r) : r;
}

QuadraticValue::QuadraticValue(Rational p, Rational q, Integer m)
    : p_(std::move(p)), q_(std::move(q)), m_(std::move(m)) {
  if (q_ == 0) {
    m_ = 0;
  } else if (is_perfect_square(m_)) {
    throw domain_error("radicand " + m_.str() + " is a perfect square");
  }
}

Integer QuadraticValue::common_radicand(const QuadraticValue& o) const {
  if (q_ == 0) return o.m_;
  if (o.q_ == 0 || m_ == o.m_) return m_;
  throw domain_error("cannot combine values in different quadratic fields");
}

QuadraticValue QuadraticValue::operator+(const QuadraticValue& o) const {
  return QuadraticValue(p_ + o.p_, q_ + o.q_, common_radicand(o));
}

QuadraticValue QuadraticValue::operator-(const QuadraticValue& o) const {
  return QuadraticValue(p_ - o.p_, q_ - o.q_, common_radicand(o));
}

QuadraticValue QuadraticValue::operator*(const QuadraticValue& o) const {
  const Integer m = common_radicand(o);
  return QuadraticValue(p_ * o.p_ + q_ * o.q_ * m, p_ * o.q_ + q_ * o.p_, m);
}

QuadraticValue QuadraticValue::pow(unsigned e) const {
  QuadraticValue result(Rational(1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

bool QuadraticValue::operator==(const QuadraticValue& o) const {
  return p_ == o.p_ && q_ == o.q_ && (q_ == 0 || m_ == o.m_);
}

std::string QuadraticValue::str() const {
  if (q_ == 0) return to_string(p_);
  return to_string(p_) + " + " + to_string(q_) + "*sqrt(" + m_.str() + ")";
}

CurvePoint CurvePoint::scaled(const Rational& u) const {
  return CurvePoint{x * QuadraticValue(u * u), y * QuadraticValue(u * u * u)};
}

WeierstrassCurve::WeierstrassCurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (4 * a_ * a_ * a_ + 27 * b_ * b_ == 0) {
    throw domain_error("singular curve: 4a^3 + 27b^2 = 0");
  }
}

Rational WeierstrassCurve::delta() const {
  const Rational g2v = g2();
  const Rational g3v = g3();
  return g2v * g2v * g2v - 27 * g3v * g3v;
}

Rational WeierstrassCurve::j() const {
  const Rational g2v = g2();
  return 1728 * g2v * g2v * g2v / delta();
}

WeierstrassCurve WeierstrassCurve::twisted(const Rational& u) const {
  if (u == 0) throw domain_error("twist parameter must be nonzero");
  const Rational u2 = u * u;
  return WeierstrassCurve(u2 * u2 * a_, u2 * u2 * u2 * b_);
}

bool WeierstrassCurve::contains(const CurvePoint& p) const {
  if (!p.is_rational()) return true;
  const Rational& x = p.x.rational_part();
  const Rational& y = p.y.rational_part();
  return y * y == x * x * x + a_ * x + b_;
}

std::vector<Rational> WeierstrassCurve::rational_two_torsion_x() const {
  // x = X/u^2 turns the cubic into the monic integer cubic X^3 + A X + B.
  const Integer u = boost::multiprecision::lcm(denominator(a_), denominator(b_));
  const Integer u2 = u * u;
  const Rational scaled_a = a_ * Rational(u2 * u2);
  const Rational scaled_b = b_ * Rational(u2 * u2 * u2);
  const Integer A = numerator(scaled_a);
  const Integer B = numerator(scaled_b);
  auto cubic = [&](const Integer& X) { return X * X * X + A * X + B; };

  std::vector<Integer> roots;
  if (B == 0) {
    roots.push_back(0);
    if (-A > 0 && is_perfect_square(-A)) {
      const Integer r = boost::multiprecision::sqrt(Integer(-A));
      roots.push_back(r);
      roots.push_back(-r);
    }
  } else {
    // Cauchy bound, then split at the critical points so each piece is monotone.
    const Integer bound = 1 + std::max(abs(A), abs(B));
    Integer s = 0;
    if (A < 0) {
      s = boost::multiprecision::sqrt(Integer(-A / 3));
      while (3 * s * s < -A) ++s;
    }
    monotone_integer_root(cubic, -bound, -s, roots);
    monotone_integer_root(cubic, -s + 1, s - 1, roots);
    monotone_integer_root(cubic, s, bound, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  }
  std::vector<Rational> xs;
  for (const Integer& X : roots) xs.emplace_back(X, u2);
  std::sort(xs.begin(), xs.end());
  return xs;
}

Rational j_invariant(const Rational& a, const Rational& b) {
  return WeierstrassCurve(a, b).j();
}

QuadraticValue weber(const WeierstrassCurve& curve, const CurvePoint& p) {
  if (!curve.contains(p)) throw domain_error("point is not on the curve");
  const Rational delta = curve.delta();
  if (curve.a() == 0) {  // j = 0
    return QuadraticValue(curve.g3() / delta) * p.x.pow(3);
  }
  if (curve.b() == 0) {  // j = 1728
    return QuadraticValue(curve.g2() * curve.g2() / delta) * p.x.pow(2);
  }
  return QuadraticValue(curve.g2() * curve.g3() / delta) * p.x;
}

bool weber_model_independence_check(const WeierstrassCurve& curve, const Rational& u,
                                    const CurvePoint& p) {
  return weber(curve, p) == weber(curve.twisted(u), p.scaled(u));
}

std::int64_t prop2_divisor(std::int64_t d_K, std::int64_t ell) {
  switch (split_type(d_K, ell)) {
    case SplitType::Split:
      return 2 * (ell - 1) * (ell - 1);
    case SplitType::Inert:
      return 2 * (ell * ell - 1);
    case SplitType::Ramified:
      return 2 * (ell * ell - ell);
  }
  return 0;
}

CriterionVerdict ell_powered_criterion(std::int64_t n, const QuadField& field, std::int64_t ell) {
  require_odd_prime(ell);
  CriterionVerdict v{};
  v.size_clause = ell <= max_conductor_prime_bound(n, field.w_K);
  v.divides_clause = field.d_K % ell == 0;
  v.possible = v.size_clause || v.divides_clause;
  if (v.size_clause && v.divides_clause) {
    v.reason = "ℓ ≤ (w_K/2)n+1 and ℓ | d_K";
  } else if (v.size_clause) {
    v.reason = "ℓ ≤ (w_K/2)n+1";
  } else if (v.divides_clause) {
    v.reason = "ℓ | d_K";
  } else {
    v.reason = "ℓ > (w_K/2)n+1 and ℓ ∤ d_K";
  }
  return v;
}

CriterionVerdict ell_powered_criterion_odd_degree(std::int64_t n, const QuadField& field,
                                                  std::int64_t ell) {
  if (n < 1 || n % 2 == 0) throw domain_error("degree must be a positive odd integer");
  require_odd_prime(ell);
  CriterionVerdict v{};
  v.size_clause = false;
  v.divides_clause = field.d_K % ell == 0;
  v.possible = v.divides_clause;
  v.reason = v.divides_clause ? "ℓ | d_K" : "ℓ ∤ d_K";
  return v;
}

CurveReport inspect_curve(const Rational& a, const Rational& b, std::int64_t n, std::int64_t ell) {
  if (n < 1) throw domain_error("degree must be positive");
  require_odd_prime(ell);
  WeierstrassCurve curve(a, b);
  CurveReport report{curve, n, ell, curve.j(), curve.rational_two_torsion_x(), {}, {}, {}, {}, {}, {}};
  report.cm = identify_cm(report.j);
  if (!report.cm) {
    report.notes.push_back(
        "j is not a CM j-invariant of any class-number-one order, so the curve has no CM "
        "and the CM criteria do not apply");
    return report;
  }
  report.field = make_field(report.cm->d_K);
  report.prop2_divisor = prop2_divisor(report.cm->d_K, ell);
  report.criterion = ell_powered_criterion(n, *report.field, ell);
  if (n % 2 == 1) report.odd_degree_criterion = ell_powered_criterion_odd_degree(n, *report.field, ell);
  report.notes.push_back(
      "the criterion is only necessary: whether [F(E[ℓ]):F(μ_ℓ)] is actually ℓ-powered "
      "depends on the Galois structure of F(E[ℓ]), which is not computed here");
  return report;
}

}  // namespace cmrt
