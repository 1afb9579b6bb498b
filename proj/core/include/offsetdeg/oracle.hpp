#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "offsetdeg/formulas.hpp"
#include "offsetdeg/polynomial.hpp"

namespace offsetdeg {

/// Result of the elimination-based cross-check. g_candidate is squarefree
/// and primitive with respect to {x1, x2}; in symbolic mode it retains d
/// as a variable, otherwise d was specialized to the rational d0.
struct EliminationResult {
  Polynomial g_candidate;
  std::vector<std::pair<Polynomial, std::string>> discarded_factors;
  std::vector<Polynomial> kept_factors;
  bool symbolic = false;
  mpq_class d0;
  std::vector<mpq_class> attempted_d0;
};

/// Computes a candidate for the (generic or specialized) offset equation by
/// iterated resultants from the offset defining system, then strips the
/// extraneous factors elimination introduces: factors free of x1 and x2 are
/// dropped outright, the rest are split against independent elimination
/// routes and kept only when they vanish at numerically sampled offset
/// points.
///
/// Cost guards: symbolic mode requires deg f <= 2, specialized mode
/// deg f <= 4. In specialized mode, if `expected` degrees are supplied and
/// the result falls short (a bad distance), the run retries with the next
/// d0 from a fixed sequence, up to 5 attempts.
EliminationResult eliminate_offset(
    const ImplicitCurve& c, bool symbolic,
    std::optional<mpq_class> d0 = std::nullopt, std::uint64_t seed = 1,
    std::optional<std::pair<int, int>> expected = std::nullopt);

struct OracleDegrees {
  int delta1 = 0;
  int delta2 = 0;
  std::optional<int> delta_d;
};

OracleDegrees oracle_degrees(const EliminationResult& res);

}  // namespace offsetdeg
