// Multivariate polynomials over Rational: graded-lex monomial enumeration,
// evaluation, products, linear substitution. Graded-lex is the single
// canonical order used everywhere (basis selection, rendering, reports).

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "grcalc/exactlin.hpp"

namespace grcalc {

struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  static Monomial one(std::size_t nvars);
  static Monomial var(std::size_t nvars, std::size_t i);
  Monomial times(const Monomial& other) const;
  std::string str() const;  // "x1^2*x3", "1" for the constant monomial

  bool operator==(const Monomial& other) const = default;
};

// Canonical order: lower degree first; within a degree, lexicographically
// larger exponent vector first (so x1, x2, ..., then x1^2, x1*x2, x2^2, ...).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of degree <= d in canonical order; count = C(nvars + d, nvars).
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d);
// Monomials of degree exactly d, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(std::size_t nvars, const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  Rational coefficient(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  bool operator==(const MultiPoly& o) const;

  Rational evaluate(const RationalVector& pt) const;

  // p(My + c): M maps the new variable space into this polynomial's variables,
  // so M has nvars() rows; the result lives in M.cols() variables.
  MultiPoly substitute_linear(const RationalMatrix& m, const RationalVector& c) const;

  // Coefficients read off against a monomial basis (canonical report format).
  RationalVector coefficients_on(const std::vector<Monomial>& basis) const;

  std::string str() const;  // e.g. "3*x1^2*x2 - 1/2*x3"

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_;
  std::map<Monomial, Rational, MonomialOrder> terms_;
};

}  // namespace grcalc
