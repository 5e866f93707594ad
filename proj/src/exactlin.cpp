#include "grcalc/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace grcalc {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.empty()) throw input_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw input_error("rational literal with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational literal: " + text);
  }
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string to_str(const RationalVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].str();
  }
  out << ")";
  return out.str();
}

RationalVector parse_vector(const std::string& text) {
  RationalVector v;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) v.push_back(Rational::parse(item));
  if (v.empty()) throw input_error("empty vector literal: " + text);
  return v;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector +: dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector -: dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator*(const Rational& c, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

RationalVector hadamard(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hadamard: dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return RationalMatrix(0, 0);
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  RationalVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
// Pivot rule: columns left to right, first remaining row with a nonzero entry.
std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RankResult rank_and_pivots(const RationalMatrix& m) {
  RationalMatrix work = m;
  RankResult res;
  res.pivot_columns = rref_in_place(work);
  res.rank = res.pivot_columns.size();
  return res;
}

std::optional<RationalVector> affine_feasible(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("affine_feasible: rows(A) != dim(b)");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::string to_str(SubspaceRelation r) {
  switch (r) {
    case SubspaceRelation::equal: return "equal";
    case SubspaceRelation::left_in_right: return "left_in_right";
    case SubspaceRelation::right_in_left: return "right_in_left";
    case SubspaceRelation::incomparable: return "incomparable";
  }
  return "?";
}

SubspaceRelation subspace_compare(const std::vector<RationalVector>& gens1,
                                  const std::vector<RationalVector>& gens2) {
  std::size_t dim = 0;
  bool have_dim = false;
  for (const auto* gens : {&gens1, &gens2})
    for (const auto& v : *gens) {
      if (!have_dim) {
        dim = v.size();
        have_dim = true;
      } else if (v.size() != dim) {
        throw std::invalid_argument("subspace_compare: ambient dimension mismatch");
      }
    }
  RowSpan left(dim), right(dim), both(dim);
  for (const auto& v : gens1) {
    left.insert(v);
    both.insert(v);
  }
  for (const auto& v : gens2) {
    right.insert(v);
    both.insert(v);
  }
  bool l_in_r = both.rank() == right.rank();
  bool r_in_l = both.rank() == left.rank();
  if (l_in_r && r_in_l) return SubspaceRelation::equal;
  if (l_in_r) return SubspaceRelation::left_in_right;
  if (r_in_l) return SubspaceRelation::right_in_left;
  return SubspaceRelation::incomparable;
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& a) {
  RationalMatrix work = a;
  auto pivots = rref_in_place(work);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

void RowSpan::reduce(RationalVector& v) const {
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot].is_zero()) continue;
    Rational f = v[pivot];
    for (std::size_t j = pivot; j < ambient_; ++j) v[j] -= f * row[j];
  }
}

bool RowSpan::insert(RationalVector v) {
  if (v.size() != ambient_) throw std::invalid_argument("RowSpan: dimension mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Rational inv = Rational(1) / v[p];
  for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
  rows_.emplace(p, std::move(v));
  return true;
}

bool RowSpan::contains(RationalVector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("RowSpan: dimension mismatch");
  reduce(v);
  return is_zero(v);
}

}  // namespace grcalc
