#pragma once

#include <utility>
#include <vector>

#include "offsetdeg/polynomial.hpp"

namespace offsetdeg {

/// Greatest common divisor over the integers (includes the integer content),
/// sign-normalized to a positive leading coefficient. gcd_z(p, 0) = |p|.
Polynomial gcd_z(const Polynomial& p, const Polynomial& q);

/// Field-normalized gcd: primitive over the integers with positive leading
/// coefficient under graded-lex. This is the gcd the degree formulae use;
/// integer contents never contribute to its degree.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// True when q divides p over the rationals.
bool divides_q(const Polynomial& q, const Polynomial& p);

/// Viewing p in the `main` variables with coefficients in the rest:
/// content = gcd of those coefficients (including integer content, positive
/// leading coefficient), pp = p / content. content_pp(0) = (0, 0).
std::pair<Polynomial, Polynomial> content_pp(const Polynomial& p, VarSet main);

/// gcd of p with its partial derivatives over every occurring variable;
/// constant iff p is squarefree over the rationals. Requires p != 0.
Polynomial squarefree_defect(const Polynomial& p);

/// p with all factor multiplicities reduced to one (field-normalized).
Polynomial squarefree_part(const Polynomial& p);

/// Decomposition p ~ prod piece^multiplicity with pairwise coprime
/// squarefree pieces; constant pieces are omitted.
std::vector<std::pair<Polynomial, int>> squarefree_decompose(
    const Polynomial& p);

}  // namespace offsetdeg
