#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cmrt/curves.hpp"
#include "cmrt/errors.hpp"
#include "cmrt/fields.hpp"

using namespace cmrt;

namespace {

// Singular moduli of the thirteen class-number-one orders, frozen from an
// independent 50-digit evaluation of Klein's j.
const std::map<std::int64_t, std::string> kSingularJ = {
    {-3, "0"},
    {-4, "1728"},
    {-7, "-3375"},
    {-8, "8000"},
    {-11, "-32768"},
    {-12, "54000"},
    {-16, "287496"},
    {-19, "-884736"},
    {-27, "-12288000"},
    {-28, "16581375"},
    {-43, "-884736000"},
    {-67, "-147197952000"},
    {-163, "-262537412640768000"},
};

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-595") == R(-595));
  CHECK(parse_rational("3/4") == R(3, 4));
  CHECK(parse_rational("-6/8") == R(-3, 4));
  CHECK(parse_rational("+7") == R(7));
  CHECK_THROWS_AS(parse_rational("1.5"), domain_error);
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
  CHECK_THROWS_AS(parse_rational(""), domain_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), domain_error);
  CHECK_THROWS_AS(parse_rational("abc"), domain_error);
}

TEST_CASE("quadratic values") {
  const QuadraticValue s(R(0), R(1), Integer(-3));  // sqrt(-3)
  CHECK(s * s == QuadraticValue(R(-3)));
  CHECK((s + QuadraticValue(R(1))).pow(2) == QuadraticValue(R(-2), R(2), Integer(-3)));
  CHECK_THROWS_AS(QuadraticValue(R(0), R(1), Integer(4)), domain_error);
  const QuadraticValue t(R(0), R(1), Integer(5));
  CHECK_THROWS_AS(s * t, domain_error);
  CHECK(QuadraticValue(R(1, 2)).str() == "1/2");
  CHECK(s.str() == "0 + 1*sqrt(-3)");
}

TEST_CASE("curve invariants") {
  const WeierstrassCurve E(R(-595), R(5586));
  CHECK(E.g2() == R(2380));
  CHECK(E.g3() == R(-22344));
  CHECK(E.delta() == R(1404928));
  CHECK(E.delta() == -16 * R(-87808));
  CHECK(E.j() == R(16581375));
  CHECK(E.rational_two_torsion_x() == std::vector<Rational>{R(14)});
  CHECK_THROWS_AS(WeierstrassCurve(R(-3), R(2)), domain_error);
  CHECK_THROWS_AS(WeierstrassCurve(R(0), R(0)), domain_error);
}

TEST_CASE("j_invariant examples") {
  CHECK(j_invariant(R(-595), R(5586)) == R(16581375));
  CHECK(j_invariant(R(-1), R(0)) == R(1728));
  CHECK(j_invariant(R(0), R(1)) == R(0));
  CHECK(j_invariant(R(1), R(1)) == R(6912, 31));
  CHECK_THROWS_AS(j_invariant(R(-3), R(2)), domain_error);
}

TEST_CASE("two-torsion search") {
  // x^3 - x = x(x-1)(x+1)
  CHECK(WeierstrassCurve(R(-1), R(0)).rational_two_torsion_x() ==
        std::vector<Rational>{R(-1), R(0), R(1)});
  CHECK(WeierstrassCurve(R(0), R(1)).rational_two_torsion_x() == std::vector<Rational>{R(-1)});
  CHECK(WeierstrassCurve(R(1), R(1)).rational_two_torsion_x().empty());
  // rational coefficients: (x - 1/2)(x^2 + x/2 + c) with a = c - 1/4, b = -c/2
  const Rational c = R(3);
  const WeierstrassCurve E(c - R(1, 4), -c / 2);
  CHECK(E.rational_two_torsion_x() == std::vector<Rational>{R(1, 2)});
}

TEST_CASE("two-torsion search agrees with a direct scan") {
  // integer roots of x^3 + ax + b lie in [-|b|, |b|] when b != 0
  for (int a = -40; a <= 40; ++a) {
    for (int b = -60; b <= 60; ++b) {
      if (4 * a * a * a + 27 * b * b == 0) continue;
      std::vector<Rational> scan;
      const int reach = b == 0 ? 40 : std::abs(b);
      for (int x = -reach; x <= reach; ++x) {
        if (x * x * x + a * x + b == 0) scan.push_back(R(x));
      }
      REQUIRE_MESSAGE(WeierstrassCurve(R(a), R(b)).rational_two_torsion_x() == scan, a, " ", b);
    }
  }
}

TEST_CASE("two-torsion search finds constructed rational roots") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-500, 500);
  std::uniform_int_distribution<int> den(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    // (x - r)(x - s)(x + r + s)
    const Rational r = R(num(rng), den(rng));
    const Rational s = R(num(rng), den(rng));
    const Rational t = -r - s;
    const Rational a = r * s + r * t + s * t;
    const Rational b = -r * s * t;
    if (4 * a * a * a + 27 * b * b == 0) continue;
    std::vector<Rational> want = {r, s, t};
    std::sort(want.begin(), want.end());
    REQUIRE(WeierstrassCurve(a, b).rational_two_torsion_x() == want);
  }
}

TEST_CASE("weber examples") {
  const WeierstrassCurve E(R(-595), R(5586));
  // (g2 g3 / Delta) * 14 = 2380 * -22344 / 1404928 * 14
  CHECK(weber(E, CurvePoint{R(14), R(0)}) == QuadraticValue(R(-33915, 64)));
  CHECK(weber(WeierstrassCurve(R(-1), R(0)), CurvePoint{R(0), R(0)}) == QuadraticValue(R(0)));
  CHECK(weber(WeierstrassCurve(R(0), R(1)), CurvePoint{R(-1), R(0)}) ==
        QuadraticValue(R(-1, 108)));
  CHECK_THROWS_AS(weber(E, CurvePoint{R(1), R(1)}), domain_error);
}

TEST_CASE("weber on a point with coordinates in a quadratic field") {
  // y^2 = x^3 + 1 at x = -1/2 + (1/2)sqrt(-3), a root of x^3 + 1 = 0
  const WeierstrassCurve E(R(0), R(1));
  const QuadraticValue x(R(1, 2), R(1, 2), Integer(-3));
  CHECK(x.pow(3) == QuadraticValue(R(-1)));
  const CurvePoint p{x, R(0)};
  // (g3/Delta) x^3 = (-4/-432)(-1)
  CHECK(weber(E, p) == QuadraticValue(R(-1, 108)));
  CHECK(weber_model_independence_check(E, R(2), p));
}

TEST_CASE("weber model independence examples") {
  const WeierstrassCurve E(R(-595), R(5586));
  const CurvePoint t{R(14), R(0)};
  CHECK(weber_model_independence_check(E, R(1), t));
  CHECK(weber_model_independence_check(WeierstrassCurve(R(-1), R(0)), R(2), CurvePoint{R(0), R(0)}));
  CHECK(weber_model_independence_check(E, R(3), t));
  CHECK_THROWS_AS(weber_model_independence_check(E, R(0), t), domain_error);
}

TEST_CASE("weber model independence and j twist invariance over generated curves") {
  const std::vector<Rational> us = {R(1), R(-1), R(2), R(-2), R(3), R(1, 2)};
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> small(-30, 30);
  std::uniform_int_distribution<int> den(1, 6);
  int triples = 0;
  auto check_all = [&](const WeierstrassCurve& E, const CurvePoint& p) {
    for (const Rational& u : us) {
      REQUIRE(weber_model_independence_check(E, u, p));
      REQUIRE(E.twisted(u).j() == E.j());
      REQUIRE(E.twisted(u).contains(p.scaled(u)));
      ++triples;
    }
  };
  for (int trial = 0; trial < 40; ++trial) {
    // curve through a chosen rational point: b = y^2 - x^3 - a x
    const Rational a = R(small(rng), den(rng));
    const Rational x = R(small(rng), den(rng));
    const Rational y = R(small(rng), den(rng));
    const Rational b = y * y - x * x * x - a * x;
    if (4 * a * a * a + 27 * b * b == 0) continue;
    const WeierstrassCurve E(a, b);
    check_all(E, CurvePoint{x, y});
    for (const Rational& root : E.rational_two_torsion_x()) check_all(E, CurvePoint{root, R(0)});
  }
  for (int trial = 0; trial < 10; ++trial) {
    // a rational 2-torsion point by construction: b = -(r^3 + a r)
    const Rational r = R(small(rng), den(rng));
    const Rational a = R(small(rng), den(rng));
    const Rational b = -(r * r * r + a * r);
    if (4 * a * a * a + 27 * b * b == 0) continue;
    const WeierstrassCurve E(a, b);
    const auto roots = E.rational_two_torsion_x();
    REQUIRE(std::find(roots.begin(), roots.end(), r) != roots.end());
    for (const Rational& root : roots) check_all(E, CurvePoint{root, R(0)});
  }
  // j = 0 and j = 1728 branches
  for (int r = 1; r <= 5; ++r) {
    check_all(WeierstrassCurve(R(0), R(-r * r * r)), CurvePoint{R(r), R(0)});
    check_all(WeierstrassCurve(R(-r * r), R(0)), CurvePoint{R(r), R(0)});
    check_all(WeierstrassCurve(R(-r * r), R(0)), CurvePoint{R(0), R(0)});
  }
  CHECK(triples >= 50);
}

TEST_CASE("j q-expansion coefficients") {
  const auto c = j_coefficients(8);
  REQUIRE(c.size() == 8);
  CHECK(c[0] == 1);
  CHECK(c[1] == 744);
  CHECK(c[2] == 196884);
  CHECK(c[3] == 21493760);
  CHECK(c[4] == 864299970);
  CHECK(c[5] == Integer("20245856256"));
  CHECK(c[6] == Integer("333202640600"));
  CHECK(c[7] == Integer("4252023300096"));
}

TEST_CASE("cm_j_value examples") {
  CHECK(cm_j_value(-28) == 16581375);
  CHECK(Rational(cm_j_value(-28)) == j_invariant(R(-595), R(5586)));
  CHECK(cm_j_value(-4) == 1728);
  const CmJEvaluation e = evaluate_cm_j(-163);
  CHECK(e.value == Integer("-262537412640768000"));
  CHECK(e.distance < 0.25);
  CHECK(e.digits >= 40);
  CHECK(e.terms >= 25);
  CHECK_THROWS_AS(cm_j_value(-20), domain_error);
  CHECK_THROWS_AS(cm_j_value(-5), domain_error);
}

TEST_CASE("all thirteen singular moduli") {
  const auto& discs = class_number_one_discriminants();
  REQUIRE(discs.size() == 13);
  for (std::int64_t d : discs) {
    REQUIRE(kSingularJ.count(d) == 1);
    const CmJEvaluation e = evaluate_cm_j(d);
    CHECK_MESSAGE(e.value == Integer(kSingularJ.at(d)), "d=", d);
    CHECK(e.distance < 1e-30);
  }
}

TEST_CASE("identify_cm") {
  CHECK(identify_cm(R(16581375)) == CmIdentification{-7, 2, -28});
  CHECK(identify_cm(R(0)) == CmIdentification{-3, 1, -3});
  CHECK(identify_cm(R(1728)) == CmIdentification{-4, 1, -4});
  CHECK_FALSE(identify_cm(R(1729)).has_value());
  CHECK_FALSE(identify_cm(R(6912, 31)).has_value());
  for (const auto& [d, j] : kSingularJ) {
    const auto cm = identify_cm(Rational(Integer(j)));
    REQUIRE(cm.has_value());
    CHECK(cm->order_disc == d);
    CHECK(cm->f * cm->f * cm->d_K == d);
    CHECK(is_fundamental_discriminant(cm->d_K));
  }
}

TEST_CASE("identify_cm rejects pseudo-random non-CM j") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 50);
  int tested = 0;
  while (tested < 100) {
    const Rational j = R(num(rng), den(rng));
    bool known = false;
    for (const auto& [d, value] : kSingularJ) known = known || j == Rational(Integer(value));
    if (known) continue;
    CHECK_FALSE(identify_cm(j).has_value());
    ++tested;
  }
}

TEST_CASE("prop2 divisor") {
  CHECK(prop2_divisor(-4, 5) == 32);
  CHECK(prop2_divisor(-3, 5) == 48);
  CHECK(prop2_divisor(-7, 7) == 84);
  CHECK_THROWS_AS(prop2_divisor(-4, 2), domain_error);
  for (std::int64_t d_K : {-3, -4, -7, -8, -11, -19, -43, -67, -163}) {
    for (std::int64_t ell : {3, 5, 7, 11, 13, 43, 67, 163}) {
      const std::int64_t v = prop2_divisor(d_K, ell);
      CHECK(v % 2 == 0);
      CHECK(v % (ell - 1) == 0);
      const int k = kronecker(d_K, ell);
      if (k == 1) CHECK(v % ((ell - 1) * (ell - 1)) == 0);
      if (k == -1) CHECK(v % (ell + 1) == 0);
      if (k == 0) CHECK(v % ell == 0);
    }
  }
}

TEST_CASE("ell-powered necessary condition") {
  const auto v163 = ell_powered_criterion(1, make_field(-163), 163);
  CHECK(v163.possible);
  CHECK(v163.reason == "ℓ | d_K");
  CHECK_FALSE(ell_powered_criterion(1, make_field(-4), 11).possible);
  const auto v7 = ell_powered_criterion(1, make_field(-7), 7);
  CHECK(v7.possible);
  CHECK(v7.reason == "ℓ | d_K");
  const auto small = ell_powered_criterion(1, make_field(-3), 3);
  CHECK(small.size_clause);
  CHECK(small.divides_clause);
  CHECK(ell_powered_criterion(2, make_field(-4), 5).reason == "ℓ ≤ (w_K/2)n+1");
  CHECK(ell_powered_criterion(1, make_field(-4), 11).reason == "ℓ > (w_K/2)n+1 and ℓ ∤ d_K");
  CHECK_THROWS_AS(ell_powered_criterion(1, make_field(-4), 2), domain_error);
}

TEST_CASE("odd-degree condition") {
  CHECK(ell_powered_criterion_odd_degree(3, make_field(-7), 7).possible);
  CHECK_FALSE(ell_powered_criterion_odd_degree(3, make_field(-163), 7).possible);
  CHECK_FALSE(ell_powered_criterion_odd_degree(1, make_field(-4), 3).possible);
  CHECK(ell_powered_criterion(1, make_field(-4), 3).possible);
  CHECK_THROWS_AS(ell_powered_criterion_odd_degree(2, make_field(-7), 7), domain_error);
  CHECK_THROWS_AS(ell_powered_criterion_odd_degree(3, make_field(-7), 2), domain_error);
}

TEST_CASE("inspect_curve") {
  const CurveReport r = inspect_curve(R(-595), R(5586), 1, 7);
  CHECK(r.j == R(16581375));
  REQUIRE(r.cm.has_value());
  CHECK(*r.cm == CmIdentification{-7, 2, -28});
  CHECK(r.field->w_K == 2);
  CHECK(*r.prop2_divisor == 84);
  CHECK(r.criterion->possible);
  CHECK(r.criterion->reason == "ℓ | d_K");
  CHECK_FALSE(r.notes.empty());

  const CurveReport s = inspect_curve(R(-1), R(0), 1, 5);
  CHECK(s.j == R(1728));
  CHECK(*s.cm == CmIdentification{-4, 1, -4});
  CHECK_FALSE(s.criterion->possible);

  const CurveReport t = inspect_curve(R(1), R(1), 1, 5);
  CHECK(t.j == R(6912, 31));
  CHECK_FALSE(t.cm.has_value());
  CHECK_FALSE(t.criterion.has_value());
  CHECK_FALSE(t.prop2_divisor.has_value());

  CHECK_THROWS_AS(inspect_curve(R(-3), R(2), 1, 5), domain_error);
  CHECK_THROWS_AS(inspect_curve(R(1), R(1), 1, 2), domain_error);
  CHECK_THROWS_AS(inspect_curve(R(1), R(1), 0, 5), domain_error);
}

}
