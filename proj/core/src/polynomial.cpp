#include "offsetdeg/polynomial.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

#include "offsetdeg/errors.hpp"

namespace offsetdeg {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) {
    m.exps_.resize(v + 1, 0);
    m.exps_[v] = e;
  }
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::uint32_t Monomial::degree_in(VarSet vars) const {
  std::uint32_t d = 0;
  for (VarId v = 0; v < exps_.size(); ++v)
    if (vars.contains(v)) d += exps_[v];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(std::max(exps_.size(), o.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += exps_[i];
  for (std::size_t i = 0; i < o.exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (exps_.size() > o.exps_.size()) {
    for (std::size_t i = o.exps_.size(); i < exps_.size(); ++i)
      if (exps_[i] != 0) return false;
  }
  for (std::size_t i = 0; i < std::min(exps_.size(), o.exps_.size()); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  assert(o.divides(*this));
  Monomial r = *this;
  for (std::size_t i = 0; i < o.exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  r.trim();
  return r;
}

Monomial Monomial::restrict_to(VarSet vars) const {
  Monomial r = *this;
  for (VarId v = 0; v < r.exps_.size(); ++v)
    if (!vars.contains(v)) r.exps_[v] = 0;
  r.trim();
  return r;
}

Monomial Monomial::without(VarSet vars) const {
  Monomial r = *this;
  for (VarId v = 0; v < r.exps_.size(); ++v)
    if (vars.contains(v)) r.exps_[v] = 0;
  r.trim();
  return r;
}

VarSet Monomial::vars() const {
  VarSet s;
  for (VarId v = 0; v < exps_.size(); ++v)
    if (exps_[v] != 0) s.insert(v);
  return s;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  auto d = total_degree() <=> o.total_degree();
  if (d != 0) return d;
  // lex with var 0 most significant: higher exponent on an earlier variable
  // means a larger monomial.
  std::size_t n = std::max(exps_.size(), o.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t a = i < exps_.size() ? exps_[i] : 0;
    std::uint32_t b = i < o.exps_.size() ? o.exps_[i] : 0;
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::var(VarId v, std::uint32_t e) {
  return term(1, Monomial::var(v, e));
}

Polynomial Polynomial::term(const mpz_class& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const Monomial& Polynomial::leading_monomial() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const mpz_class& Polynomial::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

VarSet Polynomial::vars() const {
  VarSet s;
  for (const auto& [m, c] : terms_) s = s | m.vars();
  return s;
}

Polynomial pow(const Polynomial& p, std::uint32_t e) {
  Polynomial r{1};
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

// ------------------------------------------------------------ exact_div

std::optional<Polynomial> try_exact_div(const Polynomial& p,
                                        const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  Polynomial rem = p;
  Polynomial quot;
  const Monomial& qm = q.leading_monomial();
  const mpz_class& qc = q.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    const mpz_class& rc = rem.leading_coefficient();
    if (!qm.divides(rm)) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), qc.get_mpz_t())) return std::nullopt;
    mpz_class c = rc / qc;
    Monomial m = rm.divide_by(qm);
    Polynomial t = Polynomial::term(c, m);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw NotDivisible{};
  return *r;
}

// ------------------------------------------------------------ calculus

Polynomial derivative(const Polynomial& p, VarId v) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.exp(v);
    if (e == 0) continue;
    Monomial dm = m.divide_by(Monomial::var(v, 1));
    r.add_term(dm, c * e);
  }
  return r;
}

Polynomial homogenize(const Polynomial& p, VarId hv, VarSet wrt) {
  assert(!p.vars().contains(hv));
  int D = degree_in(p, wrt);
  if (D <= 0) return p;
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t d = m.degree_in(wrt);
    r.add_term(m * Monomial::var(hv, static_cast<std::uint32_t>(D) - d), c);
  }
  return r;
}

int degree_in(const Polynomial& p, VarSet wrt) {
  if (p.is_zero()) return -1;
  int d = 0;
  for (const auto& [m, c] : p.terms())
    d = std::max(d, static_cast<int>(m.degree_in(wrt)));
  return d;
}

int degree_in_var(const Polynomial& p, VarId v) {
  return degree_in(p, VarSet{v});
}

bool is_homogeneous(const Polynomial& p, VarSet wrt) {
  if (p.is_zero()) return true;
  std::uint32_t d = p.terms().begin()->first.degree_in(wrt);
  for (const auto& [m, c] : p.terms())
    if (m.degree_in(wrt) != d) return false;
  return true;
}

std::vector<Polynomial> coeffs_in(const Polynomial& p, VarId v) {
  std::vector<Polynomial> cs(static_cast<std::size_t>(
      std::max(0, degree_in_var(p, v)) + 1));
  for (const auto& [m, c] : p.terms())
    cs[m.exp(v)].add_term(m.without(VarSet{v}), c);
  return cs;
}

Polynomial from_coeffs(const std::vector<Polynomial>& cs, VarId v) {
  Polynomial r;
  for (std::uint32_t i = 0; i < cs.size(); ++i)
    r += cs[i] * Polynomial::var(v, i);
  return r;
}

// ------------------------------------------------------------ substitute

Binding Binding::rational(const mpq_class& q) {
  Binding b;
  b.num = Polynomial(mpz_class(q.get_num()));
  b.den = q.get_den();
  return b;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<VarId, Binding>& bindings) {
  if (bindings.empty() || p.is_zero()) return p;

  // Common denominator: den_v ^ (max exponent of v in p).
  VarSet bound;
  std::map<VarId, std::uint32_t> maxdeg;
  bool any_rational = false;
  for (const auto& [v, b] : bindings) {
    bound.insert(v);
    maxdeg[v] = static_cast<std::uint32_t>(std::max(0, degree_in_var(p, v)));
    if (b.den != 1) any_rational = true;
  }

  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::term(c, m.without(bound));
    for (const auto& [v, b] : bindings) {
      std::uint32_t e = m.exp(v);
      if (e > 0) t = t * pow(b.num, e);
      std::uint32_t pad = maxdeg[v] - std::min(maxdeg[v], m.exp(v));
      if (b.den != 1 && pad > 0) {
        mpz_class dk;
        mpz_pow_ui(dk.get_mpz_t(), b.den.get_mpz_t(), pad);
        t = t.scaled(dk);
      }
    }
    out += t;
  }
  if (any_rational) {
    mpz_class ic = integer_content(out);
    if (ic > 1) out = exact_div(out, Polynomial(ic));
  }
  return out;
}

// ------------------------------------------------------------ content

mpz_class integer_content(const Polynomial& p) {
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class ic = integer_content(p);
  if (p.leading_coefficient() < 0) ic = -ic;
  return exact_div(p, Polynomial(ic));
}

// ------------------------------------------------------------ numeric

double eval_double(const Polynomial& p, std::span<const double> values) {
  double acc = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double t = c.get_d();
    for (VarId v = 0; v < kMaxVars; ++v) {
      std::uint32_t e = m.exp(v);
      if (e == 0) continue;
      double x = v < values.size() ? values[v] : 0.0;
      t *= std::pow(x, static_cast<double>(e));
    }
    acc += t;
  }
  return acc;
}

double eval_double_scale(const Polynomial& p, std::span<const double> values) {
  double acc = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double t = std::fabs(c.get_d());
    for (VarId v = 0; v < kMaxVars; ++v) {
      std::uint32_t e = m.exp(v);
      if (e == 0) continue;
      double x = v < values.size() ? values[v] : 0.0;
      t *= std::pow(std::fabs(x), static_cast<double>(e));
    }
    acc += t;
  }
  return acc;
}

// ------------------------------------------------------------ printing

std::string to_string(const Monomial& m, const VarTable& vars) {
  std::ostringstream os;
  bool first = true;
  for (VarId v = 0; v < kMaxVars; ++v) {
    std::uint32_t e = m.exp(v);
    if (e == 0) continue;
    if (!first) os << "*";
    os << vars.name(v);
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const Polynomial& p, const VarTable& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomial first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || m.is_one()) {
      os << a.get_str();
      if (!m.is_one()) os << "*";
    }
    if (!m.is_one()) os << to_string(m, vars);
    first = false;
  }
  return os.str();
}

}  // namespace offsetdeg
