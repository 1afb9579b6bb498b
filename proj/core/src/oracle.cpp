#include "offsetdeg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "offsetdeg/errors.hpp"
#include "offsetdeg/gcd.hpp"
#include "offsetdeg/resultant.hpp"

namespace offsetdeg {

namespace {

constexpr double kSampleTol = 1e-6;

struct SamplePoint {
  double x1, x2, d;
};

Polynomial specialize_d(const Polynomial& p, const mpq_class& d0) {
  std::map<VarId, Binding> b;
  b.emplace(kD, Binding::rational(d0));
  return substitute(p, b);
}

/// Real roots of sum c[i] y^i on [lo, hi] by sign-change bisection.
std::vector<double> real_roots(const std::vector<double>& c, double lo,
                               double hi) {
  auto eval = [&](double y) {
    double v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * y + c[i];
    return v;
  };
  std::vector<double> roots;
  const int grid = 600;
  double prev = eval(lo);
  for (int i = 1; i <= grid; ++i) {
    double y = lo + (hi - lo) * i / grid;
    double cur = eval(y);
    if (prev == 0.0) roots.push_back(lo + (hi - lo) * (i - 1) / grid);
    if (prev * cur < 0) {
      double a = lo + (hi - lo) * (i - 1) / grid, b = y;
      double fa = prev;
      for (int it = 0; it < 80; ++it) {
        double m = 0.5 * (a + b), fm = eval(m);
        if (fa * fm <= 0)
          b = m;
        else
          a = m, fa = fm;
      }
      roots.push_back(0.5 * (a + b));
    }
    prev = cur;
  }
  return roots;
}

/// Offset sample points: numeric points on f = 0 displaced along the unit
/// normal by each distance in `dists`, both directions.
std::vector<SamplePoint> offset_samples(const ImplicitCurve& c,
                                        const std::vector<double>& dists,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick(-3.0, 3.0);
  std::vector<double> vals(kMaxVars, 0.0);
  std::vector<SamplePoint> out;

  auto slice_coeffs = [&](VarId fixed, double a) {
    VarId free = fixed == kY1 ? kY2 : kY1;
    std::vector<Polynomial> cs = coeffs_in(c.f, free);
    std::vector<double> dc(cs.size());
    vals[fixed] = a;
    for (std::size_t i = 0; i < cs.size(); ++i)
      dc[i] = eval_double(cs[i], vals);
    return dc;
  };

  for (int tries = 0; tries < 400 && out.size() < 120; ++tries) {
    VarId fixed = (tries & 1) ? kY2 : kY1;
    double a = pick(rng);
    std::vector<double> dc = slice_coeffs(fixed, a);
    for (double r : real_roots(dc, -6.0, 6.0)) {
      double y1 = fixed == kY1 ? a : r;
      double y2 = fixed == kY1 ? r : a;
      vals[kY1] = y1;
      vals[kY2] = y2;
      double g1 = eval_double(c.f1, vals), g2 = eval_double(c.f2, vals);
      double norm = std::sqrt(g1 * g1 + g2 * g2);
      if (norm < 1e-6) continue;
      for (double d0 : dists)
        for (double sign : {1.0, -1.0}) {
          out.push_back({y1 + sign * d0 * g1 / norm,
                         y2 + sign * d0 * g2 / norm, d0});
        }
    }
  }
  return out;
}

bool vanishes_at_sample(const Polynomial& piece,
                        const std::vector<SamplePoint>& samples) {
  std::vector<double> vals(kMaxVars, 0.0);
  std::size_t hits = 0, judged = 0;
  for (const SamplePoint& s : samples) {
    vals[kX1] = s.x1;
    vals[kX2] = s.x2;
    vals[kD] = s.d;
    double v = eval_double(piece, vals);
    double scale = eval_double_scale(piece, vals);
    if (scale <= 0) continue;
    ++judged;
    if (std::fabs(v) < kSampleTol * scale) ++hits;
  }
  // a genuine component carries a sizable share of the samples (all of
  // them when the offset is irreducible, half in the two-component case),
  // while a stray factor grazes a couple at best
  return judged > 0 && hits * 10 > judged;
}

std::optional<Polynomial> try_resultant(const Polynomial& p,
                                        const Polynomial& q, VarId v) {
  try {
    Polynomial r = resultant(p, q, v);
    if (r.is_zero()) return std::nullopt;
    return r;
  } catch (const DegenerateResultant&) {
    return std::nullopt;
  }
}

/// One full elimination pass at a fixed (symbolic or numeric) distance.
EliminationResult eliminate_once(const ImplicitCurve& c, bool symbolic,
                                 const mpq_class& d0, std::uint64_t seed) {
  EliminationResult res;
  res.symbolic = symbolic;
  res.d0 = d0;

  Polynomial y1 = Polynomial::var(kY1), y2 = Polynomial::var(kY2),
             x1 = Polynomial::var(kX1), x2 = Polynomial::var(kX2),
             d = Polynomial::var(kD);
  Polynomial dx = x1 - y1, dy = x2 - y2;
  Polynomial dist = dx * dx + dy * dy - d * d;
  Polynomial nrm = c.f1 * dy - c.f2 * dx;
  if (!symbolic) dist = specialize_d(dist, d0);

  Polynomial r1 = resultant(c.f, dist, kY1);
  Polynomial r2 = resultant(c.f, nrm, kY1);
  Polynomial R = resultant(r1, r2, kY2);
  if (R.is_zero()) throw DegenerateResultant("offset elimination collapsed to zero");

  // independent elimination routes; genuine offset factors survive all of
  // them, elimination artifacts generally do not
  std::vector<Polynomial> routes;
  if (auto p2 = try_resultant(c.f, nrm + c.f, kY1))
    if (auto alt = try_resultant(r1, *p2, kY2))
      routes.push_back(squarefree_part(*alt));
  if (auto p1 = try_resultant(c.f, dist + nrm, kY1))
    if (auto alt = try_resultant(*p1, r2, kY2))
      routes.push_back(squarefree_part(*alt));
  {
    // the foot-point form: x = y + s grad f, s^2 |grad f|^2 = d^2, with the
    // slack variable s reusing the k slot
    Polynomial s = Polynomial::var(kK);
    Polynomial a1 = dx - c.f1 * s;
    Polynomial a2 = dy - c.f2 * s;
    Polynomial sq = s * s * (c.f1 * c.f1 + c.f2 * c.f2) - d * d;
    if (!symbolic) sq = specialize_d(sq, d0);
    if (auto u1 = try_resultant(a1, sq, kK))
      if (auto u2 = try_resultant(a1, a2, kK))
        if (auto v1 = try_resultant(c.f, *u1, kY1))
          if (auto v2 = try_resultant(c.f, *u2, kY1))
            if (auto w = try_resultant(*v1, *v2, kY2))
              routes.push_back(squarefree_part(*w));
  }

  std::vector<Polynomial> pieces;
  for (const auto& [piece, mult] : squarefree_decompose(R)) {
    (void)mult;
    pieces.push_back(piece);
  }
  for (const Polynomial& route : routes) {
    std::vector<Polynomial> next;
    for (const Polynomial& p : pieces) {
      Polynomial g = gcd(p, route);
      if (g.is_constant() || degree_in(g, p.vars()) == degree_in(p, p.vars())) {
        next.push_back(p);
        continue;
      }
      next.push_back(g);
      next.push_back(primitive_part(exact_div(p, g)));
    }
    pieces = std::move(next);
  }

  std::vector<double> dists;
  if (symbolic)
    dists = {0.4375, 0.71875};
  else
    dists = {std::fabs(d0.get_d())};
  std::vector<SamplePoint> samples = offset_samples(c, dists, seed);
  if (samples.size() < 20)
    throw SampleFailure("could not generate enough offset sample points");

  Polynomial g_total(1);
  for (const Polynomial& p : pieces) {
    if (p.is_constant()) continue;
    if (degree_in(p, kOffsetVars) <= 0) {
      res.discarded_factors.emplace_back(p, "free of x1 and x2");
      continue;
    }
    if (!vanishes_at_sample(p, samples)) {
      res.discarded_factors.emplace_back(p, "fails offset sample test");
      continue;
    }
    res.kept_factors.push_back(p);
    g_total = g_total * p;
  }
  if (res.kept_factors.empty())
    throw SampleFailure("every elimination factor failed the sample test");

  g_total = squarefree_part(g_total);
  res.g_candidate = content_pp(g_total, kOffsetVars).second;
  return res;
}

}  // namespace

EliminationResult eliminate_offset(const ImplicitCurve& c, bool symbolic,
                                   std::optional<mpq_class> d0,
                                   std::uint64_t seed,
                                   std::optional<std::pair<int, int>> expected) {
  for (VarId v : c.f.vars().to_vector())
    if (v != kY1 && v != kY2)
      throw Error("oracle needs a numeric curve; substitute parameters first");
  if (symbolic && c.n > 2)
    throw CostGuard("symbolic-d oracle is limited to curves of degree 2");
  if (!symbolic && c.n > 4)
    throw CostGuard("specialized-d oracle is limited to curves of degree 4");

  std::vector<mpq_class> fallback = {mpq_class(1, 3), mpq_class(2, 5),
                                     mpq_class(3, 7), mpq_class(5, 11),
                                     mpq_class(7, 13)};
  std::vector<mpq_class> schedule;
  if (d0) schedule.push_back(*d0);
  for (const mpq_class& q : fallback)
    if (!d0 || q != *d0) schedule.push_back(q);

  if (symbolic) {
    EliminationResult r = eliminate_once(c, true, schedule.front(), seed);
    r.attempted_d0 = {};
    return r;
  }

  int max_attempts = expected ? 5 : 1;
  std::vector<mpq_class> tried;
  for (int i = 0; i < max_attempts && i < static_cast<int>(schedule.size());
       ++i) {
    tried.push_back(schedule[static_cast<std::size_t>(i)]);
    EliminationResult r =
        eliminate_once(c, false, schedule[static_cast<std::size_t>(i)], seed);
    r.attempted_d0 = tried;
    if (!expected) return r;
    int dx1 = std::max(0, degree_in_var(r.g_candidate, kX1));
    int dx2 = std::max(0, degree_in_var(r.g_candidate, kX2));
    if (dx1 >= expected->first && dx2 >= expected->second) return r;
    if (i + 1 == max_attempts || i + 1 == static_cast<int>(schedule.size()))
      return r;
  }
  throw SampleFailure("no usable specialization distance found");
}

OracleDegrees oracle_degrees(const EliminationResult& res) {
  OracleDegrees d;
  d.delta1 = std::max(0, degree_in_var(res.g_candidate, kX1));
  d.delta2 = std::max(0, degree_in_var(res.g_candidate, kX2));
  if (res.symbolic) d.delta_d = std::max(0, degree_in_var(res.g_candidate, kD));
  return d;
}

}  // namespace offsetdeg
