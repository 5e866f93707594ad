// Exact rational scalars, vectors and dense matrices, plus the row-reduction
// primitives (rank, feasibility, subspace comparison) everything else sits on.
// All arithmetic is arbitrary precision via GMP; nothing here ever rounds.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grcalc {

// Thrown for malformed user-facing input (maps to CLI exit code 2).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rational number kept canonical: lowest terms, positive denominator.
// mpq_class alone does not canonicalize two-argument construction, so all
// construction funnels through here.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  // Accepts "p", "-p", "p/q" with optional sign; q > 0 after normalization.
  static Rational parse(const std::string& text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  Rational abs() const;

  std::string str() const;  // "p/q", or "p" when q == 1

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  mpq_class value_;
};

using RationalVector = std::vector<Rational>;

std::string to_str(const RationalVector& v);                  // "(a, b, c)"
RationalVector parse_vector(const std::string& text);         // "a,b,c"
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& c, const RationalVector& v);
// Entrywise product; the ring structure of functions on a finite point set.
RationalVector hadamard(const RationalVector& a, const RationalVector& b);

// Dense row-major matrix of Rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalMatrix transposed() const;
  RationalVector apply(const RationalVector& x) const;  // matrix * vector

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Gaussian elimination with the fixed pivot rule: scan columns left to right,
// take the first row with a nonzero entry. Pivot sets are reproducible.
RankResult rank_and_pivots(const RationalMatrix& m);

// Some x with Ax = b, free variables set to zero; nullopt when inconsistent.
std::optional<RationalVector> affine_feasible(const RationalMatrix& a, const RationalVector& b);

enum class SubspaceRelation { equal, left_in_right, right_in_left, incomparable };
std::string to_str(SubspaceRelation r);

// Verdict from three rank computations: rank(L), rank(R), rank(L ∪ R).
SubspaceRelation subspace_compare(const std::vector<RationalVector>& gens1,
                                  const std::vector<RationalVector>& gens2);

// Basis of { x : Ax = 0 }, one vector per free column, in column order.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& a);

// Inverse of a square matrix; throws std::invalid_argument when singular.
RationalMatrix inverse(const RationalMatrix& a);

// Incremental row-echelon accumulator: feed vectors one by one, rank grows
// when the new vector is independent of everything inserted so far.
class RowSpan {
 public:
  explicit RowSpan(std::size_t ambient) : ambient_(ambient) {}

  // True iff v was independent (and is now part of the span).
  bool insert(RationalVector v);
  bool contains(RationalVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

 private:
  void reduce(RationalVector& v) const;

  std::size_t ambient_;
  std::map<std::size_t, RationalVector> rows_;  // pivot column -> row, pivot entry = 1
};

}  // namespace grcalc
