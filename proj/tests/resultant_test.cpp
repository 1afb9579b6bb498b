#include <doctest.h>

#include <offsetdeg/errors.hpp>
#include <offsetdeg/resultant.hpp>
#include <offsetdeg/vartable.hpp>

using namespace offsetdeg;

namespace {

Polynomial y1() { return Polynomial::var(kY1); }
Polynomial y2() { return Polynomial::var(kY2); }

}  // namespace

TEST_CASE("resultant of two linear polynomials") {
  // Res_y1(y1 - y2, y1 - 3) = 3 - y2 up to the classical sign convention
  Polynomial r = resultant(y1() - y2(), y1() - Polynomial(3), kY1);
  CHECK((r == Polynomial(3) - y2() || r == y2() - Polynomial(3)));
}

TEST_CASE("resultant detects a common root") {
  Polynomial p = (y1() - y2()) * (y1() + Polynomial(1));
  Polynomial q = (y1() - y2()) * (y1() - Polynomial(5));
  CHECK(resultant(p, q, kY1).is_zero());
}

TEST_CASE("quadratic discriminant shape") {
  // Res_y1(y1^2 + b y1 + c, 2 y1 + b) = -(b^2 - 4 c), computed here with
  // b = y2 and c = 7
  Polynomial p = y1() * y1() + y2() * y1() + Polynomial(7);
  Polynomial r = resultant(p, derivative(p, kY1), kY1);
  Polynomial disc = y2() * y2() - Polynomial(28);
  CHECK((r == disc || r == -disc));
}

TEST_CASE("both algorithms agree") {
  Polynomial p = y1() * y1() * y2() - Polynomial(2) * y1() + y2() * y2();
  Polynomial q = y2() * y1() * y1() * y1() + y1() * y2() - Polynomial(3);
  Polynomial a = resultant(p, q, kY1, ResultantAlgo::prs);
  Polynomial b = resultant(p, q, kY1, ResultantAlgo::bareiss);
  CHECK(a == b);
}

TEST_CASE("multiplicativity on a fixed example") {
  Polynomial p = y1() + y2();
  Polynomial q = y1() - Polynomial(2) * y2();
  Polynomial r = y1() * y1() + y2();
  CHECK(resultant(p * q, r, kY1) == resultant(p, r, kY1) * resultant(q, r, kY1));
}

TEST_CASE("positive degree in the eliminated variable is required") {
  CHECK_THROWS_AS(resultant(y2(), y1() + y2(), kY1), DegenerateResultant);
  CHECK_THROWS_AS(resultant(Polynomial(4), Polynomial(5), kY1),
                  DegenerateResultant);
}
