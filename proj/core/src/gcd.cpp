#include "offsetdeg/gcd.hpp"

#include <algorithm>
#include <cassert>

#include "dense_view.hpp"
#include "offsetdeg/errors.hpp"

namespace offsetdeg {

using detail::dense_deg;
using detail::dense_prem;

namespace {

Polynomial positive_lead(const Polynomial& p) {
  if (p.is_zero() || p.leading_coefficient() > 0) return p;
  return -p;
}

VarId lowest_var(VarSet s) {
  for (VarId v = 0; v < kMaxVars; ++v)
    if (s.contains(v)) return v;
  return kMaxVars;
}

/// gcd_z folded over the coefficients of p viewed in v.
Polynomial content_wrt(const Polynomial& p, VarId v) {
  Polynomial g;
  for (const Polynomial& c : coeffs_in(p, v)) {
    if (c.is_zero()) continue;
    g = gcd_z(g, c);
    if (g.is_constant() && g.leading_coefficient() == 1) break;
  }
  return g;
}

Polynomial primitive_wrt(const Polynomial& p, VarId v) {
  Polynomial c = content_wrt(p, v);
  return positive_lead(exact_div(p, c));
}

mpz_class max_norm(const Polynomial& p) {
  mpz_class m = 0;
  for (const auto& [mon, c] : p.terms()) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

Polynomial eval_at(const Polynomial& p, VarId v, const mpz_class& xi) {
  std::vector<Polynomial> cs = coeffs_in(p, v);
  Polynomial r;
  for (std::size_t i = cs.size(); i-- > 0;) r = r.scaled(xi) + cs[i];
  return r;
}

/// Symmetric remainder in (-xi/2, xi/2].
mpz_class sym_mod(const mpz_class& a, const mpz_class& xi) {
  mpz_class r = a % xi;
  if (r < 0) r += xi;
  if (2 * r > xi) r -= xi;
  return r;
}

Polynomial sym_mod_poly(const Polynomial& p, const mpz_class& xi) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, sym_mod(c, xi));
  return r;
}

/// Port of the classical heuristic gcd: evaluate at a large integer,
/// take the integer gcd, recover the polynomial by xi-adic interpolation,
/// and verify by exact division, falling back to cofactor interpolation
/// when the primitive candidate loses a content factor. Returns
/// (h, f/h, g/h) or nullopt when every evaluation point was unlucky.
struct HeuResult {
  Polynomial h, cff, cfg;
};

Polynomial interpolate(const Polynomial& img, const mpz_class& xi, VarId v) {
  Polynomial g;
  Polynomial rest = img;
  std::uint32_t digit = 0;
  while (!rest.is_zero()) {
    Polynomial gi = sym_mod_poly(rest, xi);
    for (const auto& [m, c] : gi.terms())
      g.add_term(m * Monomial::var(v, digit), c);
    Polynomial diff = rest - gi;
    Polynomial next;
    for (const auto& [m, c] : diff.terms()) next.add_term(m, c / xi);
    rest = next;
    ++digit;
    if (digit > 4096) return Polynomial{};  // cannot happen for sane inputs
  }
  return g;
}

std::optional<HeuResult> gcd_heu(const Polynomial& f0, const Polynomial& g0,
                                 int depth) {
  if (depth > 12) return std::nullopt;
  if (f0.is_zero() || g0.is_zero()) return std::nullopt;

  if (f0.is_constant() && g0.is_constant()) {
    mpz_class a = f0.leading_coefficient(), b = g0.leading_coefficient(), h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return HeuResult{Polynomial(h), exact_div(f0, Polynomial(h)),
                     exact_div(g0, Polynomial(h))};
  }

  mpz_class ig;
  {
    mpz_class cf = integer_content(f0), cg = integer_content(g0);
    mpz_gcd(ig.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  }
  Polynomial f = exact_div(f0, Polynomial(ig));
  Polynomial g = exact_div(g0, Polynomial(ig));
  VarId v = lowest_var(f.vars() | g.vars());

  mpz_class fn = max_norm(f), gn = max_norm(g);
  mpz_class B = 2 * std::min(fn, gn) + 29;
  mpz_class sqB;
  mpz_sqrt(sqB.get_mpz_t(), B.get_mpz_t());
  mpz_class flc = abs(f.leading_coefficient()), glc = abs(g.leading_coefficient());
  mpz_class cap = 99 * sqB;
  mpz_class lo = 2 * std::min(mpz_class(fn / flc), mpz_class(gn / glc)) + 4;
  mpz_class xi = std::max(std::min(B, cap), lo);

  for (int attempt = 0; attempt < 6; ++attempt) {
    Polynomial ff = eval_at(f, v, xi);
    Polynomial gg = eval_at(g, v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      std::optional<HeuResult> sub = gcd_heu(ff, gg, depth + 1);
      if (sub) {
        Polynomial h = interpolate(sub->h, xi, v);
        if (!h.is_zero()) {
          h = exact_div(h, Polynomial(integer_content(h)));
          if (auto cff = try_exact_div(f, h))
            if (auto cfg = try_exact_div(g, h))
              return HeuResult{positive_lead(h.scaled(ig)), *cff, *cfg};
        }
        Polynomial cff = interpolate(sub->cff, xi, v);
        if (!cff.is_zero())
          if (auto h2 = try_exact_div(f, cff))
            if (auto cfg = try_exact_div(g, *h2))
              return HeuResult{positive_lead(h2->scaled(ig)), cff, *cfg};
        Polynomial cfg = interpolate(sub->cfg, xi, v);
        if (!cfg.is_zero())
          if (auto h2 = try_exact_div(g, cfg))
            if (auto cff2 = try_exact_div(f, *h2))
              return HeuResult{positive_lead(h2->scaled(ig)), *cff2, cfg};
      }
    }
    mpz_class r4;
    mpz_root(r4.get_mpz_t(), xi.get_mpz_t(), 4);
    xi = mpz_class(73794 * xi * r4) / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd_z(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return positive_lead(q);
  if (q.is_zero()) return positive_lead(p);
  if (p.is_constant() || q.is_constant()) {
    mpz_class g;
    mpz_class cp = integer_content(p), cq = integer_content(q);
    mpz_gcd(g.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
    return Polynomial(g);
  }

  mpz_class icp = integer_content(p), icq = integer_content(q);
  mpz_class ig;
  mpz_gcd(ig.get_mpz_t(), icp.get_mpz_t(), icq.get_mpz_t());
  {
    Polynomial pp = exact_div(p, Polynomial(icp));
    Polynomial qq = exact_div(q, Polynomial(icq));
    if (std::optional<HeuResult> g = gcd_heu(pp, qq, 0))
      return positive_lead(g->h.scaled(ig));
  }

  VarId v = lowest_var(p.vars() | q.vars());
  bool in_p = p.vars().contains(v);
  bool in_q = q.vars().contains(v);
  if (!in_p) return gcd_z(p, content_wrt(q, v));
  if (!in_q) return gcd_z(content_wrt(p, v), q);

  Polynomial contp = content_wrt(p, v);
  Polynomial contq = content_wrt(q, v);
  Polynomial c = gcd_z(contp, contq);

  std::vector<Polynomial> a = coeffs_in(exact_div(p, contp), v);
  std::vector<Polynomial> b = coeffs_in(exact_div(q, contq), v);
  if (dense_deg(a) < dense_deg(b)) std::swap(a, b);

  // primitive polynomial remainder sequence in v
  for (;;) {
    std::vector<Polynomial> r = dense_prem(a, b);
    int dr = dense_deg(r);
    if (dr < 0) {
      Polynomial g = primitive_wrt(from_coeffs(b, v), v);
      return positive_lead(c * g);
    }
    if (dr == 0) return c;
    Polynomial rp = primitive_wrt(from_coeffs(r, v), v);
    a = std::move(b);
    b = coeffs_in(rp, v);
  }
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  return primitive_part(gcd_z(p, q));
}

bool divides_q(const Polynomial& q, const Polynomial& p) {
  if (q.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  return try_exact_div(primitive_part(p), primitive_part(q)).has_value();
}

std::pair<Polynomial, Polynomial> content_pp(const Polynomial& p,
                                             VarSet main) {
  if (p.is_zero()) return {Polynomial{}, Polynomial{}};
  // group terms by their main-variable part
  std::map<Monomial, Polynomial> groups;
  for (const auto& [m, c] : p.terms())
    groups[m.restrict_to(main)].add_term(m.without(main), c);
  Polynomial content;
  for (const auto& [m, coeff] : groups) {
    content = gcd_z(content, coeff);
    if (content.is_constant() && content.leading_coefficient() == 1) break;
  }
  return {content, exact_div(p, content)};
}

Polynomial squarefree_defect(const Polynomial& p) {
  assert(!p.is_zero());
  Polynomial g = p;
  for (VarId v : p.vars().to_vector()) {
    g = gcd(g, derivative(p, v));
    if (g.is_constant()) break;
  }
  return primitive_part(g);
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial pp = primitive_part(p);
  if (pp.is_constant()) return pp;
  return positive_lead(exact_div(pp, squarefree_defect(pp)));
}

std::vector<std::pair<Polynomial, int>> squarefree_decompose(
    const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial cur = primitive_part(p);
  if (cur.is_constant()) return out;

  // S[m] = product of factors with multiplicity > m
  std::vector<Polynomial> S;
  while (!cur.is_constant()) {
    Polynomial d = squarefree_defect(cur);
    S.push_back(positive_lead(exact_div(cur, d)));
    cur = d;
  }
  for (std::size_t m = 0; m < S.size(); ++m) {
    Polynomial piece =
        m + 1 < S.size() ? positive_lead(exact_div(S[m], S[m + 1])) : S[m];
    if (!piece.is_constant())
      out.emplace_back(piece, static_cast<int>(m + 1));
  }
  return out;
}

}  // namespace offsetdeg
