#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace offsetdeg {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- polyring ----
struct NotDivisible : Error {
  NotDivisible() : Error("no exact quotient exists") {}
};
struct DegenerateResultant : Error {
  explicit DegenerateResultant(const std::string& what) : Error(what) {}
};

// ---- parser ----
struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};
struct UnknownVariable : Error {
  std::string name;
  explicit UnknownVariable(const std::string& n)
      : Error("unknown variable '" + n + "'"), name(n) {}
};
struct CommonFactor : Error {
  explicit CommonFactor(const std::string& factor)
      : Error("parametrization has a nonconstant common factor: " + factor) {}
};
struct ZeroDenominator : Error {
  ZeroDenominator() : Error("parametrization denominator is zero") {}
};

// ---- formulas ----
struct IsLine : Error {
  IsLine() : Error("curve is a line (total degree < 2)") {}
};
struct NotSquarefree : Error {
  NotSquarefree() : Error("curve polynomial is not squarefree") {}
};
struct IsotropicDivisor : Error {
  IsotropicDivisor() : Error("f divides f1^2 + f2^2") {}
};
struct DegenerateAuxiliary : Error {
  explicit DegenerateAuxiliary(const std::string& what) : Error(what) {}
};
struct DegenerateParametrization : Error {
  explicit DegenerateParametrization(const std::string& what) : Error(what) {}
};
struct FormulaMismatch : Error {
  int value_a, value_b;
  FormulaMismatch(int a, int b)
      : Error("parametric formulae disagree: A=" + std::to_string(a) +
              " B=" + std::to_string(b)),
        value_a(a),
        value_b(b) {}
};

// ---- oracle ----
struct CostGuard : Error {
  explicit CostGuard(const std::string& what) : Error(what) {}
};
struct SampleFailure : Error {
  explicit SampleFailure(const std::string& what) : Error(what) {}
};

// ---- cli / corpus ----
struct FixtureError : Error {
  explicit FixtureError(const std::string& what) : Error(what) {}
};

}  // namespace offsetdeg
