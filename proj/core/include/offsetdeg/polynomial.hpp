#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "offsetdeg/vartable.hpp"

namespace offsetdeg {

/// Exponent vector over the variable universe; trailing zeros are trimmed so
/// equal monomials compare equal regardless of how they were built.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, std::uint32_t e = 1);

  std::uint32_t exp(VarId v) const {
    return v < exps_.size() ? exps_[v] : 0;
  }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarSet vars) const;
  bool is_one() const { return exps_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// *this / o; requires o.divides-free exactness (checked by assert).
  Monomial divide_by(const Monomial& o) const;

  /// Keep only exponents of `vars` (others zeroed).
  Monomial restrict_to(VarSet vars) const;
  /// Zero out exponents of `vars`.
  Monomial without(VarSet vars) const;

  VarSet vars() const;

  /// Graded lexicographic order over the canonical variable order.
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
  friend class Polynomial;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Canonical form: no zero coefficients are stored, so equal
/// polynomials have identical term maps.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  explicit Polynomial(const mpz_class& c);
  explicit Polynomial(long c) : Polynomial(mpz_class(c)) {}
  static Polynomial var(VarId v, std::uint32_t e = 1);
  static Polynomial term(const mpz_class& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Leading term under graded-lex; requires nonzero.
  const Monomial& leading_monomial() const;
  const mpz_class& leading_coefficient() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial scaled(const mpz_class& c) const;

  void add_term(const Monomial& m, const mpz_class& c);

  VarSet vars() const;

 private:
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, std::uint32_t e);

/// Exact quotient p / q; throws NotDivisible when none exists over the
/// integers. This doubles as the divisibility test of the engine.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);
std::optional<Polynomial> try_exact_div(const Polynomial& p,
                                        const Polynomial& q);

/// Formal partial derivative.
Polynomial derivative(const Polynomial& p, VarId v);

/// Each term is padded with hv^(D - termdeg), D the total degree of p in
/// `wrt`. `hv` must not occur in p.
Polynomial homogenize(const Polynomial& p, VarId hv, VarSet wrt);

/// Maximal combined degree of terms restricted to `wrt`; -1 for the zero
/// polynomial.
int degree_in(const Polynomial& p, VarSet wrt);
int degree_in_var(const Polynomial& p, VarId v);

/// True when every term has the same combined degree in `wrt`.
bool is_homogeneous(const Polynomial& p, VarSet wrt);

/// p viewed as a univariate polynomial in v: coefficient of v^i at index i.
/// The coefficients no longer involve v.
std::vector<Polynomial> coeffs_in(const Polynomial& p, VarId v);
Polynomial from_coeffs(const std::vector<Polynomial>& cs, VarId v);

/// A value a variable may be bound to: a polynomial numerator over an
/// integer denominator.
struct Binding {
  Polynomial num;
  mpz_class den = 1;

  static Binding rational(const mpq_class& q);
  static Binding poly(Polynomial p) { return Binding{std::move(p), 1}; }
};

/// Simultaneous substitution. If rational bindings are involved the result
/// is rescaled to integer content (degrees are scale-invariant throughout
/// the engine).
Polynomial substitute(const Polynomial& p,
                      const std::map<VarId, Binding>& bindings);

/// Integer content (gcd of all coefficients, nonnegative; 0 for the zero
/// polynomial).
mpz_class integer_content(const Polynomial& p);

/// p divided by its integer content, sign fixed so the leading coefficient
/// is positive. primitive_part(0) = 0.
Polynomial primitive_part(const Polynomial& p);

/// Floating point evaluation; `values` is indexed by VarId.
double eval_double(const Polynomial& p, std::span<const double> values);
/// Magnitude of the evaluation with every term taken at absolute value;
/// the natural scale for relative vanishing tests.
double eval_double_scale(const Polynomial& p, std::span<const double> values);

std::string to_string(const Polynomial& p, const VarTable& vars);
std::string to_string(const Monomial& m, const VarTable& vars);

}  // namespace offsetdeg
