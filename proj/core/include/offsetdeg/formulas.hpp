#pragma once

#include <optional>
#include <string>

#include "offsetdeg/parser.hpp"
#include "offsetdeg/polynomial.hpp"
#include "offsetdeg/resultant.hpp"

namespace offsetdeg {

/// A validated implicit curve f(y1, y2) = 0 with cached derivatives and
/// homogenizations. F is the degree-n homogenization of f with respect to
/// y3; F1 and F2 are the homogenizations of the partials, padded with y3
/// powers to degree exactly n - 1 so that the auxiliary constructions stay
/// homogeneous.
struct ImplicitCurve {
  Polynomial f;
  int n = 0;
  Polynomial f1, f2;
  Polynomial F, F1, F2;
};

enum class Axis { x1, x2 };

struct Diagnostics {
  int resultant_degree = -1;
  int content_degree = -1;
  long long ms = 0;
};

struct DegreeReport {
  int delta1 = 0;
  int delta2 = 0;
  std::optional<int> delta_d;
  std::string method;
  Diagnostics diagnostics;
};

/// Checks every precondition of the degree formulae: degree at least 2
/// (lines are excluded), f squarefree over the rationals, and f not a
/// divisor of f1^2 + f2^2. Irreducibility over the complex numbers is
/// assumed, not verified.
ImplicitCurve validate_implicit(const Polynomial& f);

/// Swaps y1 and y2 in f and revalidates.
ImplicitCurve swap_axes(const ImplicitCurve& c);

/// S = (F2^2 + F1^2)(y2 - k y3)^2 - F2^2 y3^2 d^2, homogeneous of degree
/// 2n in {y1, y2, y3}.
Polynomial build_auxiliary_S(const ImplicitCurve& c);

/// N = -F2 (x1 y3 - y1) + F1 (x2 y3 - y2), homogeneous of degree n in
/// {y1, y2, y3} and linear in {x1, x2}.
Polynomial build_normal_N(const ImplicitCurve& c);

/// Degree of the generic offset equation in x1 (or, via the y1/y2 swap,
/// in x2): the {y1,y2}-degree of the primitive part with respect to {d,k}
/// of Res_y3(F, S).
int partial_degree_implicit(const ImplicitCurve& c, Axis axis,
                            ResultantAlgo algo = ResultantAlgo::prs,
                            Diagnostics* diag = nullptr);

/// Degree of the generic offset equation in d: twice the {y1,y2}-degree
/// of the primitive part with respect to {x1,x2} of Res_y3(F, N).
int distance_degree_implicit(const ImplicitCurve& c,
                             ResultantAlgo algo = ResultantAlgo::prs,
                             Diagnostics* diag = nullptr);

/// Parametric partial degree via the auxiliary polynomial: the t-degree of
/// the primitive part with respect to {k,d} of
/// (N1^2 + N2^2)(W k - Y)^2 - d^2 W^2 N2^2 (x2 mirrors Y to X and N2 to N1).
int partial_degree_parametric_A(const RationalParametrization& p, Axis axis,
                                Diagnostics* diag = nullptr);

/// Parametric partial degree via the closed gcd form:
/// 2(max(deg Y, deg W) + max(deg N1, deg N2)) - deg Theta with
/// Theta = gcd(W^2 gcd(N1,N2)^2, (N1^2+N2^2) Y gcd(W,Y)), gcds taken
/// primitive (integer content discarded).
int partial_degree_parametric_B(const RationalParametrization& p, Axis axis);

DegreeReport degree_report(const ImplicitCurve& c,
                           ResultantAlgo algo = ResultantAlgo::prs);

/// Runs both parametric formulae on both axes and requires agreement.
DegreeReport degree_report(const RationalParametrization& p);

}  // namespace offsetdeg
