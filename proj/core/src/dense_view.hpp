#pragma once

#include <vector>

#include "offsetdeg/polynomial.hpp"

// Helpers for treating a multivariate polynomial as a dense univariate one
// over a coefficient ring, shared by the gcd and resultant routines.

namespace offsetdeg::detail {

inline int dense_deg(const std::vector<Polynomial>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[i].is_zero()) return i;
  return -1;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, returns r.
inline std::vector<Polynomial> dense_prem(std::vector<Polynomial> a,
                                          const std::vector<Polynomial>& b) {
  int db = dense_deg(b);
  const Polynomial& lcb = b[static_cast<std::size_t>(db)];
  int da = dense_deg(a);
  int e = da - db + 1;
  while (da >= db) {
    Polynomial top = a[static_cast<std::size_t>(da)];
    for (int i = 0; i < da; ++i) a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * lcb;
    a[static_cast<std::size_t>(da)] = Polynomial{};
    for (int i = 0; i < db; ++i)
      a[static_cast<std::size_t>(i + da - db)] -= b[static_cast<std::size_t>(i)] * top;
    da = dense_deg(a);
    --e;
  }
  if (e > 0) {
    Polynomial scale = pow(lcb, static_cast<std::uint32_t>(e));
    for (auto& c : a) c = c * scale;
  }
  a.resize(static_cast<std::size_t>((da < 0 ? 0 : da) + 1));
  return a;
}

}  // namespace offsetdeg::detail
