#include "offsetdeg/resultant.hpp"

#include <utility>
#include <vector>

#include "dense_view.hpp"
#include "offsetdeg/errors.hpp"
#include "offsetdeg/gcd.hpp"

namespace offsetdeg {

using detail::dense_deg;
using detail::dense_prem;

namespace {

/// Subresultant remainder sequence with exact sign bookkeeping.
Polynomial resultant_prs(std::vector<Polynomial> a, std::vector<Polynomial> b,
                         int sign) {
  int da = dense_deg(a), db = dense_deg(b);

  Polynomial conta, contb;
  {
    for (const auto& c : a)
      if (!c.is_zero()) conta = gcd_z(conta, c);
    for (const auto& c : b)
      if (!c.is_zero()) contb = gcd_z(contb, c);
    for (auto& c : a) c = exact_div(c, conta);
    for (auto& c : b) c = exact_div(c, contb);
  }
  Polynomial t = pow(conta, static_cast<std::uint32_t>(db)) *
                 pow(contb, static_cast<std::uint32_t>(da));

  Polynomial g(1), h(1);
  for (;;) {
    da = dense_deg(a);
    db = dense_deg(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    std::vector<Polynomial> r = dense_prem(a, b);
    if (dense_deg(r) < 0) return Polynomial{};  // common factor in v
    a = std::move(b);
    Polynomial div = g * pow(h, static_cast<std::uint32_t>(delta));
    for (auto& c : r) c = exact_div(c, div);
    b = std::move(r);
    g = a[static_cast<std::size_t>(dense_deg(a))];
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_div(pow(g, static_cast<std::uint32_t>(delta)),
                    pow(h, static_cast<std::uint32_t>(delta - 1)));
    if (dense_deg(b) == 0) break;
  }
  int dlast = dense_deg(a);
  Polynomial lcb = b[0];
  Polynomial res = exact_div(pow(lcb, static_cast<std::uint32_t>(dlast)),
                             pow(h, static_cast<std::uint32_t>(dlast - 1)));
  res = t * res;
  return sign < 0 ? -res : res;
}

Polynomial resultant_bareiss(const std::vector<Polynomial>& a,
                             const std::vector<Polynomial>& b, int sign) {
  int da = dense_deg(a), db = dense_deg(b);
  int n = da + db;
  // Sylvester matrix, coefficients in decreasing degree
  std::vector<std::vector<Polynomial>> m(
      static_cast<std::size_t>(n),
      std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] =
          a[static_cast<std::size_t>(da - i)];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i)
      m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + i)] =
          b[static_cast<std::size_t>(db - i)];

  Polynomial prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    std::size_t ku = static_cast<std::size_t>(k);
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!m[static_cast<std::size_t>(r)][ku].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Polynomial{};
    if (pivot != k) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[ku]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      std::size_t iu = static_cast<std::size_t>(i);
      for (int j = k + 1; j < n; ++j) {
        std::size_t ju = static_cast<std::size_t>(j);
        m[iu][ju] =
            exact_div(m[ku][ku] * m[iu][ju] - m[iu][ku] * m[ku][ju], prev);
      }
      m[iu][ku] = Polynomial{};
    }
    prev = m[ku][ku];
  }
  Polynomial det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign < 0 ? -det : det;
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, VarId v,
                     ResultantAlgo algo) {
  int dp = degree_in_var(p, v);
  int dq = degree_in_var(q, v);
  if (dp < 1 || dq < 1)
    throw DegenerateResultant(
        "resultant requires positive degree in the elimination variable");
  std::vector<Polynomial> a = coeffs_in(p, v);
  std::vector<Polynomial> b = coeffs_in(q, v);
  int sign = 1;
  if (dp < dq) {
    std::swap(a, b);
    if ((dp & 1) && (dq & 1)) sign = -1;
  }
  return algo == ResultantAlgo::prs ? resultant_prs(std::move(a), std::move(b), sign)
                                    : resultant_bareiss(a, b, sign);
}

}  // namespace offsetdeg
