#pragma once

#include "offsetdeg/polynomial.hpp"

namespace offsetdeg {

enum class ResultantAlgo { prs, bareiss };

/// Resultant of p and q with respect to v, exact including sign.
///
/// Both arguments must have positive degree in v; otherwise the Sylvester
/// matrix degenerates and DegenerateResultant is thrown. The default
/// algorithm is a subresultant remainder sequence; bareiss evaluates the
/// Sylvester determinant by fraction-free elimination and is mainly useful
/// as a cross-check on small inputs.
Polynomial resultant(const Polynomial& p, const Polynomial& q, VarId v,
                     ResultantAlgo algo = ResultantAlgo::prs);

}  // namespace offsetdeg
