#include <doctest.h>

#include <offsetdeg/errors.hpp>
#include <offsetdeg/gcd.hpp>
#include <offsetdeg/oracle.hpp>
#include <offsetdeg/parser.hpp>

using namespace offsetdeg;

namespace {

ImplicitCurve curve(const std::string& src) {
  VarTable vt;
  return validate_implicit(parse_polynomial(src, vt, {"y1", "y2"}));
}

bool equal_up_to_scale(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return primitive_part(a) == primitive_part(b);
}

}  // namespace

TEST_CASE("unit circle: symbolic elimination factors as two circles") {
  EliminationResult r = eliminate_offset(curve("y1^2+y2^2-1"), true);
  Polynomial x1 = Polynomial::var(kX1), x2 = Polynomial::var(kX2);
  Polynomial d = Polynomial::var(kD), one(1);
  Polynomial inner = x1 * x1 + x2 * x2 - (one + d) * (one + d);
  Polynomial outer = x1 * x1 + x2 * x2 - (one - d) * (one - d);
  CHECK(equal_up_to_scale(r.g_candidate, inner * outer));
  OracleDegrees deg = oracle_degrees(r);
  CHECK(deg.delta1 == 4);
  CHECK(deg.delta2 == 4);
  CHECK(deg.delta_d == 4);
}

TEST_CASE("parabola: symbolic elimination has the formula degrees") {
  EliminationResult r = eliminate_offset(curve("y2-y1^2"), true, std::nullopt,
                                         1, std::pair<int, int>{6, 4});
  OracleDegrees deg = oracle_degrees(r);
  CHECK(deg.delta1 == 6);
  CHECK(deg.delta2 == 4);
  CHECK(deg.delta_d == 6);
  CHECK(integer_content(r.g_candidate) == 1);
  CHECK(squarefree_defect(r.g_candidate).is_constant());
}

TEST_CASE("cuspidal cubic at a fixed distance") {
  EliminationResult r = eliminate_offset(curve("y1^3-y2^2"), false,
                                         mpq_class(3), 1,
                                         std::pair<int, int>{8, 6});
  OracleDegrees deg = oracle_degrees(r);
  CHECK(deg.delta1 == 8);
  CHECK(deg.delta2 == 6);
  CHECK(!deg.delta_d.has_value());
  CHECK(!r.symbolic);
}

TEST_CASE("cost guards") {
  CHECK_THROWS_AS(eliminate_offset(curve("y1^3-y2^2"), true), CostGuard);
  CHECK_THROWS_AS(
      eliminate_offset(curve("y1^5+y2^5-3*y1*y2"), false, mpq_class(1, 2)),
      CostGuard);
}

TEST_CASE("bad distance is retried when expected degrees are supplied") {
  // d0 = 1 degenerates for the unit circle; the retry ladder must land on
  // a good distance and still reach the right degrees
  EliminationResult r = eliminate_offset(curve("y1^2+y2^2-1"), false,
                                         mpq_class(1), 1,
                                         std::pair<int, int>{4, 4});
  OracleDegrees deg = oracle_degrees(r);
  CHECK(deg.delta1 == 4);
  CHECK(deg.delta2 == 4);
  CHECK(r.attempted_d0.size() >= 1);
}
