#include "offsetdeg/formulas.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "offsetdeg/errors.hpp"
#include "offsetdeg/gcd.hpp"

namespace offsetdeg {

namespace {

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

Polynomial pad_to_degree(const Polynomial& p, int target) {
  if (p.is_zero()) return p;
  Polynomial h = homogenize(p, kY3, kProjectiveVars);
  int have = degree_in(h, kProjectiveVars);
  if (have < target)
    return h * pow(Polynomial::var(kY3), static_cast<std::uint32_t>(target - have));
  return h;
}

void require_homogeneous(const Polynomial& r, int max_degree) {
  if (r.is_zero()) throw DegenerateResultant("eliminant vanished identically");
  if (!is_homogeneous(r, kAffineVars))
    throw Error("internal: eliminant lost homogeneity in y1, y2");
  if (degree_in(r, kAffineVars) > max_degree)
    throw Error("internal: eliminant degree exceeds its bound");
}

}  // namespace

ImplicitCurve validate_implicit(const Polynomial& f) {
  if (f.is_zero()) throw Error("curve polynomial is zero");
  for (VarId v : f.vars().to_vector())
    if (v != kY1 && v != kY2 && v < kFirstParam)
      throw Error("curve polynomial may only use y1, y2 and parameters");

  ImplicitCurve c;
  c.f = f;
  c.n = degree_in(f, kAffineVars);
  if (c.n < 2) throw IsLine();
  if (!squarefree_defect(f).is_constant()) throw NotSquarefree();

  c.f1 = derivative(f, kY1);
  c.f2 = derivative(f, kY2);
  if (c.f1.is_zero() && c.f2.is_zero())
    throw Error("curve has identically zero gradient");
  if (divides_q(f, c.f1 * c.f1 + c.f2 * c.f2)) throw IsotropicDivisor();

  c.F = pad_to_degree(c.f, c.n);
  c.F1 = pad_to_degree(c.f1, c.n - 1);
  c.F2 = pad_to_degree(c.f2, c.n - 1);
  return c;
}

ImplicitCurve swap_axes(const ImplicitCurve& c) {
  std::map<VarId, Binding> swap;
  swap.emplace(kY1, Binding::poly(Polynomial::var(kY2)));
  swap.emplace(kY2, Binding::poly(Polynomial::var(kY1)));
  return validate_implicit(substitute(c.f, swap));
}

Polynomial build_auxiliary_S(const ImplicitCurve& c) {
  Polynomial y2 = Polynomial::var(kY2), y3 = Polynomial::var(kY3),
             d = Polynomial::var(kD), k = Polynomial::var(kK);
  Polynomial lin = y2 - k * y3;
  Polynomial s =
      (c.F2 * c.F2 + c.F1 * c.F1) * lin * lin - c.F2 * c.F2 * y3 * y3 * d * d;
  if (degree_in_var(s, kY3) < 1) throw DegenerateAuxiliary("auxiliary polynomial lost its y3 dependence");
  return s;
}

Polynomial build_normal_N(const ImplicitCurve& c) {
  Polynomial y1 = Polynomial::var(kY1), y2 = Polynomial::var(kY2),
             y3 = Polynomial::var(kY3), x1 = Polynomial::var(kX1),
             x2 = Polynomial::var(kX2);
  Polynomial n = -c.F2 * (x1 * y3 - y1) + c.F1 * (x2 * y3 - y2);
  if (degree_in_var(n, kY3) < 1) throw DegenerateAuxiliary("auxiliary polynomial lost its y3 dependence");
  return n;
}

int partial_degree_implicit(const ImplicitCurve& c, Axis axis,
                            ResultantAlgo algo, Diagnostics* diag) {
  if (axis == Axis::x2)
    return partial_degree_implicit(swap_axes(c), Axis::x1, algo, diag);
  auto start = std::chrono::steady_clock::now();
  Polynomial S = build_auxiliary_S(c);
  Polynomial R = resultant(c.F, S, kY3, algo);
  require_homogeneous(R, 2 * c.n * c.n);
  auto [content, pp] = content_pp(R, kAuxVars);
  int deg = degree_in(pp, kAffineVars);
  if (diag) {
    diag->resultant_degree = degree_in(R, kAffineVars);
    diag->content_degree = degree_in(content, kAffineVars);
    diag->ms = elapsed_ms(start);
  }
  return deg;
}

int distance_degree_implicit(const ImplicitCurve& c, ResultantAlgo algo,
                             Diagnostics* diag) {
  auto start = std::chrono::steady_clock::now();
  Polynomial N = build_normal_N(c);
  Polynomial R = resultant(c.F, N, kY3, algo);
  require_homogeneous(R, c.n * c.n);
  auto [content, pp] = content_pp(R, kOffsetVars);
  int deg = degree_in(pp, kAffineVars);
  if (diag) {
    diag->resultant_degree = degree_in(R, kAffineVars);
    diag->content_degree = degree_in(content, kAffineVars);
    diag->ms = elapsed_ms(start);
  }
  return 2 * deg;
}

int partial_degree_parametric_A(const RationalParametrization& p, Axis axis,
                                Diagnostics* diag) {
  auto start = std::chrono::steady_clock::now();
  Polynomial d = Polynomial::var(kD), k = Polynomial::var(kK);
  const Polynomial& coord = axis == Axis::x1 ? p.Y : p.X;
  const Polynomial& normal = axis == Axis::x1 ? p.N2 : p.N1;
  Polynomial lin = p.W * k - coord;
  Polynomial S = (p.N1 * p.N1 + p.N2 * p.N2) * lin * lin -
                 d * d * p.W * p.W * normal * normal;
  if (S.is_zero()) throw DegenerateParametrization("degenerate parametrization");
  auto [content, pp] = content_pp(S, kAuxVars);
  int deg = degree_in_var(pp, kT);
  if (diag) {
    diag->resultant_degree = degree_in_var(S, kT);
    diag->content_degree = degree_in_var(content, kT);
    diag->ms = elapsed_ms(start);
  }
  return deg;
}

int partial_degree_parametric_B(const RationalParametrization& p, Axis axis) {
  const Polynomial& coord = axis == Axis::x1 ? p.Y : p.X;
  Polynomial gn = gcd(p.N1, p.N2);
  Polynomial gw = gcd(p.W, coord);
  Polynomial theta = gcd(p.W * p.W * gn * gn,
                         (p.N1 * p.N1 + p.N2 * p.N2) * coord * gw);
  int dc = std::max(degree_in_var(coord, kT), degree_in_var(p.W, kT));
  int dn = std::max(degree_in_var(p.N1, kT), degree_in_var(p.N2, kT));
  if (dc < 0 || dn < 0) throw DegenerateParametrization("degenerate parametrization");
  return 2 * (dc + dn) - std::max(0, degree_in_var(theta, kT));
}

DegreeReport degree_report(const ImplicitCurve& c, ResultantAlgo algo) {
  auto start = std::chrono::steady_clock::now();
  DegreeReport r;
  r.method = "implicit";
  r.delta1 = partial_degree_implicit(c, Axis::x1, algo, &r.diagnostics);
  r.delta2 = partial_degree_implicit(c, Axis::x2, algo);
  r.delta_d = distance_degree_implicit(c, algo);
  r.diagnostics.ms = elapsed_ms(start);
  return r;
}

DegreeReport degree_report(const RationalParametrization& p) {
  auto start = std::chrono::steady_clock::now();
  DegreeReport r;
  r.method = "parametric";
  r.delta1 = partial_degree_parametric_A(p, Axis::x1, &r.diagnostics);
  int b1 = partial_degree_parametric_B(p, Axis::x1);
  if (r.delta1 != b1) throw FormulaMismatch(r.delta1, b1);
  r.delta2 = partial_degree_parametric_A(p, Axis::x2);
  int b2 = partial_degree_parametric_B(p, Axis::x2);
  if (r.delta2 != b2) throw FormulaMismatch(r.delta2, b2);
  r.diagnostics.ms = elapsed_ms(start);
  return r;
}

}  // namespace offsetdeg
