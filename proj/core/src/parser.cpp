#include "offsetdeg/parser.hpp"

#include <cctype>
#include <gmpxx.h>

#include <map>
#include <utility>

#include "offsetdeg/errors.hpp"
#include "offsetdeg/gcd.hpp"

namespace offsetdeg {

namespace {

/// Intermediate rational-coefficient polynomial used only during parsing.
struct QPoly {
  std::map<Monomial, mpq_class> terms;

  void add(const Monomial& m, const mpq_class& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
};

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& [m, c] : b.terms) r.add(m, c);
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& [m, c] : b.terms) r.add(m, -c);
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.add(ma * mb, ca * cb);
  return r;
}

QPoly qpow(const QPoly& a, unsigned long e) {
  QPoly r;
  r.add(Monomial{}, 1);
  QPoly base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

class Parser {
 public:
  Parser(const std::string& text, VarTable& vars,
         const std::set<std::string>& allowed)
      : text_(text), vars_(vars), allowed_(allowed) {}

  QPoly run() {
    QPoly p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "unexpected trailing input");
    return p;
  }

 private:
  const std::string& text_;
  VarTable& vars_;
  const std::set<std::string>& allowed_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  QPoly expr() {
    bool neg = false;
    skip_ws();
    if (accept('-'))
      neg = true;
    else
      accept('+');
    QPoly p = term();
    if (neg) p = QPoly{} - p;
    for (;;) {
      if (accept('+'))
        p = p + term();
      else if (accept('-'))
        p = p - term();
      else
        break;
    }
    return p;
  }

  QPoly term() {
    QPoly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  QPoly factor() {
    QPoly p = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = natural(at);
      if (!e.fits_ulong_p() || e > 100000)
        throw ParseError(at, "exponent too large");
      p = qpow(p, e.get_ui());
    }
    return p;
  }

  QPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly p = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  mpz_class natural(std::size_t at) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError(at, "expected a number");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  QPoly number() {
    std::size_t at = pos_;
    mpz_class num = natural(at);
    mpz_class den = 1;
    if (accept('/')) {
      std::size_t dat = pos_;
      den = natural(dat);
      if (den == 0) throw ParseError(dat, "zero denominator in literal");
    }
    QPoly p;
    mpq_class q(num, den);
    q.canonicalize();
    p.add(Monomial{}, q);
    return p;
  }

  QPoly name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string id = text_.substr(start, pos_ - start);
    if (!allowed_.count(id)) throw UnknownVariable(id);
    VarId v = vars_.intern(id);
    QPoly p;
    p.add(Monomial::var(v), 1);
    return p;
  }
};

Polynomial clear_denominators(const QPoly& q) {
  mpz_class l = 1;
  for (const auto& [m, c] : q.terms)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Polynomial p;
  for (const auto& [m, c] : q.terms) {
    mpq_class scaled = c * mpq_class(l);
    p.add_term(m, scaled.get_num());
  }
  return p;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, VarTable& vars,
                            const std::set<std::string>& allowed) {
  return clear_denominators(Parser(text, vars, allowed).run());
}

RationalParametrization parse_parametrization(
    const std::string& x_text, const std::string& y_text,
    const std::string& w_text, VarTable& vars,
    const std::set<std::string>& extra_params, bool reduce) {
  std::set<std::string> allowed = extra_params;
  allowed.insert("t");
  RationalParametrization p;
  p.X = parse_polynomial(x_text, vars, allowed);
  p.Y = parse_polynomial(y_text, vars, allowed);
  p.W = parse_polynomial(w_text, vars, allowed);
  if (p.W.is_zero()) throw ZeroDenominator();

  Polynomial g = gcd(gcd(p.X, p.Y), p.W);
  if (!g.is_constant()) {
    if (!reduce) throw CommonFactor(to_string(g, vars));
    p.X = exact_div(p.X, g);
    p.Y = exact_div(p.Y, g);
    p.W = exact_div(p.W, g);
  }

  Polynomial Xp = derivative(p.X, kT), Yp = derivative(p.Y, kT),
             Wp = derivative(p.W, kT);
  p.N1 = -(p.W * Yp - Wp * p.Y);
  p.N2 = p.W * Xp - Wp * p.X;
  if (p.N1.is_zero() && p.N2.is_zero()) throw DegenerateParametrization("normal vector vanishes identically");
  return p;
}

}  // namespace offsetdeg
