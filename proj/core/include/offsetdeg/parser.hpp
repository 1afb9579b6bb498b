#pragma once

#include <set>
#include <string>

#include "offsetdeg/polynomial.hpp"
#include "offsetdeg/vartable.hpp"

namespace offsetdeg {

/// Parses an integer/rational-coefficient polynomial expression.
///
/// Grammar: literals are `int` or `int/int`, names match
/// [a-zA-Z][a-zA-Z0-9]*, operators + - * ^ with the usual precedence,
/// parentheses, explicit `*` (no juxtaposition), nonnegative integer
/// exponents. A leading minus on an additive term is allowed.
///
/// Names must be members of `allowed`; parameters are interned into `vars`.
/// Rational coefficients are cleared by one global integer rescale (the lcm
/// of the denominators), so integer inputs come through verbatim.
Polynomial parse_polynomial(const std::string& text, VarTable& vars,
                            const std::set<std::string>& allowed);

/// A plane curve traced by (X(t)/W(t), Y(t)/W(t)), with the associated
/// normal vector components N1 = -(W Y' - W' Y), N2 = W X' - W' X.
struct RationalParametrization {
  Polynomial X, Y, W;
  Polynomial N1, N2;
};

/// Parses and validates a rational parametrization. The three components
/// may use t and any names in `extra_params`. A nonconstant gcd(X, Y, W)
/// is divided out when `reduce` is set and reported as CommonFactor
/// otherwise; W must be nonzero and (N1, N2) nonzero.
RationalParametrization parse_parametrization(
    const std::string& x_text, const std::string& y_text,
    const std::string& w_text, VarTable& vars,
    const std::set<std::string>& extra_params = {}, bool reduce = false);

}  // namespace offsetdeg
