#include <doctest.h>

#include <offsetdeg/gcd.hpp>
#include <offsetdeg/polynomial.hpp>
#include <offsetdeg/vartable.hpp>

using namespace offsetdeg;

namespace {

Polynomial y1() { return Polynomial::var(kY1); }
Polynomial y2() { return Polynomial::var(kY2); }
Polynomial x1() { return Polynomial::var(kX1); }
Polynomial x2() { return Polynomial::var(kX2); }

}  // namespace

TEST_CASE("gcd_z keeps the integer content, gcd drops it") {
  Polynomial p = (Polynomial(6) * y1() - Polynomial(6) * y2()) *
                 (y1() + y2());
  Polynomial q = (Polynomial(4) * y1() + Polynomial(4) * y2()) *
                 (y1() + y2());
  Polynomial gz = gcd_z(p, q);
  CHECK(gz == Polynomial(2) * (y1() + y2()));
  CHECK(gcd(p, q) == y1() + y2());
}

TEST_CASE("gcd of coprime polynomials is constant") {
  CHECK(gcd(y1() + Polynomial(1), y2() - Polynomial(3)).is_constant());
  CHECK(gcd_z(Polynomial(12), Polynomial(18)) == Polynomial(6));
  CHECK(gcd_z(Polynomial{}, y1().scaled(-2)) == y1().scaled(2));
}

TEST_CASE("gcd recovers a shared multivariate factor with content") {
  // the two arguments share 2 (x2 y1 - x1 y2)(y1^2 + y2^2)
  Polynomial cross = x2() * y1() - x1() * y2();
  Polynomial circ = y1() * y1() + y2() * y2();
  Polynomial p = cross * cross * circ;
  p = p.scaled(4);
  Polynomial q = (cross * circ * circ).scaled(2);
  CHECK(gcd_z(p, q) == (cross * circ).scaled(2));
}

TEST_CASE("divides_q is rational divisibility") {
  Polynomial p = (y1() + y2()) * (y1() - y2());
  CHECK(divides_q(y1() + y2(), p));
  CHECK(divides_q((y1() + y2()).scaled(7), p.scaled(3)));
  CHECK(!divides_q(y1() + Polynomial(1), p));
}

TEST_CASE("content and primitive part with respect to a variable set") {
  // in {x1}: coefficients are 2 y1 (y1+y2) and 2 y1 y2; content 2 y1
  Polynomial p = Polynomial(2) * y1() * (y1() + y2()) * x1() +
                 Polynomial(2) * y1() * y2();
  auto [c, pp] = content_pp(p, {kX1});
  CHECK(c == Polynomial(2) * y1());
  CHECK(c * pp == p);
  auto [cz, ppz] = content_pp(Polynomial{}, {kX1});
  CHECK(cz.is_zero());
  CHECK(ppz.is_zero());
}

TEST_CASE("squarefree detection and decomposition") {
  Polynomial sq = (y1() + y2()) * (y1() + y2()) * (y1() - y2());
  CHECK(!squarefree_defect(sq).is_constant());
  CHECK(squarefree_defect((y1() + y2()) * (y1() - y2())).is_constant());

  Polynomial sf = squarefree_part(sq);
  CHECK(sf == (y1() + y2()) * (y1() - y2()));

  auto dec = squarefree_decompose(sq);
  REQUIRE(dec.size() == 2);
  Polynomial rebuilt(1);
  for (auto& [piece, mult] : dec) rebuilt = rebuilt * pow(piece, mult);
  CHECK(divides_q(rebuilt, sq));
  CHECK(divides_q(sq, rebuilt));
}
