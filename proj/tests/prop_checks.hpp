#pragma once

// Randomized engine properties, shared between the property suite and the
// acceptance runner. Each function runs `cases` independent trials and
// returns the number of failed ones.

#include <offsetdeg/errors.hpp>
#include <offsetdeg/formulas.hpp>
#include <offsetdeg/gcd.hpp>
#include <offsetdeg/polynomial.hpp>
#include <offsetdeg/resultant.hpp>

#include "test_support.hpp"

namespace offsetdeg::testing {

inline int prop_ring_axioms(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VarId> vars = {kY1, kY2, kD};
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    Polynomial p = random_poly(rng, vars, 5, 3);
    Polynomial q = random_poly(rng, vars, 5, 3);
    Polynomial r = random_poly(rng, vars, 5, 3);
    bool ok = (p + q) + r == p + (q + r) && p + q == q + p &&
              p * q == q * p && (p * q) * r == p * (q * r) &&
              p * (q + r) == p * q + p * r && p - p == Polynomial{} &&
              p * Polynomial(1) == p && (p + Polynomial{}) == p;
    if (!ok) ++bad;
  }
  return bad;
}

inline int prop_leibniz(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VarId> vars = {kY1, kY2};
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    Polynomial p = random_poly(rng, vars, 5, 4);
    Polynomial q = random_poly(rng, vars, 5, 4);
    VarId v = (i & 1) ? kY2 : kY1;
    if (derivative(p * q, v) !=
        derivative(p, v) * q + p * derivative(q, v))
      ++bad;
  }
  return bad;
}

inline int prop_gcd_divisibility(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VarId> vars = {kY1, kY2};
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    Polynomial p = random_poly_nz(rng, vars, 3, 2);
    Polynomial q = random_poly_nz(rng, vars, 3, 2);
    Polynomial r = random_poly_nz(rng, vars, 2, 2);
    Polynomial g = gcd_z(p, q);
    bool ok = try_exact_div(p, g).has_value() &&
              try_exact_div(q, g).has_value();
    // a common factor must show up in the gcd
    Polynomial gr = gcd(p * r, q * r);
    ok = ok && divides_q(primitive_part(r), gr);
    if (!ok) ++bad;
  }
  return bad;
}

inline int prop_content_pp(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VarId> vars = {kY1, kY2, kX1};
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    Polynomial p = random_poly_nz(rng, vars, 4, 3) *
                   random_poly_nz(rng, {kY1, kY2}, 2, 2);
    auto [c, pp] = content_pp(p, {kX1});
    bool ok = c * pp == p;
    ok = ok && content_pp(pp, {kX1}).first.is_constant();
    if (!ok) ++bad;
  }
  return bad;
}

inline int prop_resultant_specialization(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> point(-5, 5);
  int bad = 0, done = 0;
  while (done < cases) {
    Polynomial p = random_poly_nz(rng, {kY1, kY2}, 4, 3);
    Polynomial q = random_poly_nz(rng, {kY1, kY2}, 4, 3);
    int dp = degree_in_var(p, kY1), dq = degree_in_var(q, kY1);
    if (dp < 1 || dq < 1) continue;
    Binding a = Binding::poly(Polynomial(point(rng)));
    Polynomial ps = substitute(p, {{kY2, a}});
    Polynomial qs = substitute(q, {{kY2, a}});
    // specialization commutes only when no leading term drops
    if (degree_in_var(ps, kY1) != dp || degree_in_var(qs, kY1) != dq)
      continue;
    ++done;
    Polynomial r = substitute(resultant(p, q, kY1), {{kY2, a}});
    if (r != resultant(ps, qs, kY1)) ++bad;
  }
  return bad;
}

inline int prop_resultant_multiplicativity(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0, done = 0;
  while (done < cases) {
    Polynomial p = random_poly_nz(rng, {kY1, kY2}, 3, 2);
    Polynomial q = random_poly_nz(rng, {kY1, kY2}, 3, 2);
    Polynomial r = random_poly_nz(rng, {kY1, kY2}, 3, 2);
    if (degree_in_var(p, kY1) < 1 || degree_in_var(q, kY1) < 1 ||
        degree_in_var(r, kY1) < 1)
      continue;
    ++done;
    if (resultant(p * q, r, kY1) !=
        resultant(p, r, kY1) * resultant(q, r, kY1))
      ++bad;
  }
  return bad;
}

inline int prop_formula_homogeneity(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    ImplicitCurve c = random_valid_curve(rng, 2, 3);
    Polynomial S;
    try {
      S = build_auxiliary_S(c);
    } catch (const DegenerateAuxiliary&) {
      continue;
    }
    Polynomial r;
    try {
      r = resultant(c.F, S, kY3);
    } catch (const DegenerateResultant&) {
      continue;
    }
    if (r.is_zero()) continue;
    bool ok = is_homogeneous(r, kAffineVars) &&
              degree_in(r, kAffineVars) <= 2 * c.n * c.n;
    if (!ok) ++bad;
  }
  return bad;
}

}  // namespace offsetdeg::testing
