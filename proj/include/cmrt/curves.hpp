#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmrt/arith.hpp"
#include "cmrt/fields.hpp"

namespace cmrt {

/// Parses "p/q" or a plain integer. Decimals are rejected.
Rational parse_rational(std::string_view text);

/// p + q sqrt(m). Rational values carry q = 0; m only matters when q != 0
/// and two irrational operands must share it.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(Rational p) : p_(std::move(p)) {}  // NOLINT: implicit from Rational
  QuadraticValue(Rational p, Rational q, Integer m);

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt_coefficient() const { return q_; }
  const Integer& radicand() const { return m_; }
  bool is_rational() const { return q_ == 0; }

  QuadraticValue operator+(const QuadraticValue& o) const;
  QuadraticValue operator-(const QuadraticValue& o) const;
  QuadraticValue operator*(const QuadraticValue& o) const;
  QuadraticValue pow(unsigned e) const;

  bool operator==(const QuadraticValue& o) const;

  std::string str() const;

 private:
  Integer common_radicand(const QuadraticValue& o) const;

  Rational p_{0};
  Rational q_{0};
  Integer m_{0};
};

struct CurvePoint {
  QuadraticValue x;
  QuadraticValue y;

  bool is_rational() const { return x.is_rational() && y.is_rational(); }
  /// (u^2 x, u^3 y), the image under the isomorphism to the u-twisted model.
  CurvePoint scaled(const Rational& u) const;
};

/// y^2 = x^3 + a x + b, equivalently y^2 = 4x^3 - g2 x - g3 with
/// g2 = -4a, g3 = -4b after y -> 2y.
class WeierstrassCurve {
 public:
  /// Throws domain_error when 4a^3 + 27b^2 = 0.
  WeierstrassCurve(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  Rational g2() const { return -4 * a_; }
  Rational g3() const { return -4 * b_; }
  /// g2^3 - 27 g3^2 = -16 (4a^3 + 27b^2).
  Rational delta() const;
  /// 1728 g2^3 / delta.
  Rational j() const;

  /// (u^4 a, u^6 b).
  WeierstrassCurve twisted(const Rational& u) const;

  /// Only decidable for rational points; algebraic points return true.
  bool contains(const CurvePoint& p) const;

  /// Rational roots of x^3 + a x + b, ascending.
  std::vector<Rational> rational_two_torsion_x() const;

 private:
  Rational a_;
  Rational b_;
};

Rational j_invariant(const Rational& a, const Rational& b);

/// Weber function: (g2 g3/delta) x for j != 0, 1728; (g2^2/delta) x^2 for
/// j = 1728; (g3/delta) x^3 for j = 0. Undefined at the point at infinity,
/// which has no affine representative here.
QuadraticValue weber(const WeierstrassCurve& curve, const CurvePoint& p);

/// Compares weber on (curve, p) with weber on the u-twisted model at the
/// image point.
bool weber_model_independence_check(const WeierstrassCurve& curve, const Rational& u,
                                    const CurvePoint& p);

/// q-expansion coefficients of j: element k is the coefficient of q^(k-1),
/// so the list starts 1, 744, 196884, ...
std::vector<Integer> j_coefficients(int count);

struct CmJEvaluation {
  std::int64_t order_disc;
  Integer value;       // nearest integer to j(tau)
  double distance;     // |j(tau) - value|
  int terms;           // series terms summed
  int digits;          // working precision in decimal digits
};

/// j((-b + sqrt d)/2) for the principal form (1, b, c) of a class-number-one
/// discriminant, from the q-expansion at 100 significant digits.
/// Throws domain_error if h(d) != 1 and internal_error if the result is not
/// within 0.25 of an integer.
CmJEvaluation evaluate_cm_j(std::int64_t order_disc);
Integer cm_j_value(std::int64_t order_disc);

/// The thirteen negative discriminants of class number one, found by
/// scanning |d| <= 200; ordered by |d|.
const std::vector<std::int64_t>& class_number_one_discriminants();

struct CmIdentification {
  std::int64_t d_K;
  std::int64_t f;
  std::int64_t order_disc;

  bool operator==(const CmIdentification&) const = default;
};

/// Matches j against cm_j_value over all class-number-one orders.
std::optional<CmIdentification> identify_cm(const Rational& j);

/// Bound on [F(E[ell]):F] for CM by O_K: 2(ell-1)^2, 2(ell^2-1) or
/// 2(ell^2-ell) as (d_K/ell) = 1, -1, 0.
std::int64_t prop2_divisor(std::int64_t d_K, std::int64_t ell);

struct CriterionVerdict {
  bool possible;        // false: the ell-powered property is ruled out
  bool size_clause;     // ell <= (w_K/2) n + 1
  bool divides_clause;  // ell | d_K
  std::string reason;
};

/// [F(E[ell]):F(mu_ell)] can be ell-powered only if ell <= (w_K/2) n + 1
/// or ell | d_K.
CriterionVerdict ell_powered_criterion(std::int64_t n, const QuadField& field, std::int64_t ell);

/// For odd n the size clause drops: possible only if ell | d_K.
CriterionVerdict ell_powered_criterion_odd_degree(std::int64_t n, const QuadField& field,
                                                  std::int64_t ell);

struct CurveReport {
  WeierstrassCurve curve;
  std::int64_t degree;
  std::int64_t ell;
  Rational j;
  std::vector<Rational> two_torsion_x;
  std::optional<CmIdentification> cm;
  std::optional<QuadField> field;
  std::optional<std::int64_t> prop2_divisor;
  std::optional<CriterionVerdict> criterion;
  std::optional<CriterionVerdict> odd_degree_criterion;
  std::vector<std::string> notes;
};

CurveReport inspect_curve(const Rational& a, const Rational& b, std::int64_t n, std::int64_t ell);

std::string to_string(const Rational& r);

}  // namespace cmrt
