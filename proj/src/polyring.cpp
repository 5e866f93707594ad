#include "grcalc/polyring.hpp"

#include <numeric>
#include <sstream>

namespace grcalc {

unsigned Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Monomial Monomial::one(std::size_t nvars) { return Monomial{std::vector<unsigned>(nvars, 0)}; }

Monomial Monomial::var(std::size_t nvars, std::size_t i) {
  Monomial m = one(nvars);
  m.exponents.at(i) = 1;
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  if (exponents.size() != other.exponents.size())
    throw std::invalid_argument("Monomial::times: variable count mismatch");
  Monomial m = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) m.exponents[i] += other.exponents[i];
  return m;
}

std::string Monomial::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) out << "*";
    out << "x" << (i + 1);
    if (exponents[i] > 1) out << "^" << exponents[i];
    first = false;
  }
  if (first) return "1";
  return out.str();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: lexicographically larger exponent vector comes first.
  return a.exponents > b.exponents;
}

namespace {

void gen_degree(std::size_t nvars, unsigned d, std::size_t pos, Monomial& scratch,
                std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    scratch.exponents[pos] = d;
    out.push_back(scratch);
    return;
  }
  for (unsigned e = d; e + 1 > 0; --e) {
    scratch.exponents[pos] = e;
    gen_degree(nvars, d - e, pos + 1, scratch, out);
    if (e == 0) break;
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  if (nvars < 1) throw std::invalid_argument("monomials_of_degree: nvars must be >= 1");
  std::vector<Monomial> out;
  Monomial scratch = Monomial::one(nvars);
  gen_degree(nvars, d, 0, scratch, out);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  if (nvars < 1) throw std::invalid_argument("monomials_up_to: nvars must be >= 1");
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto level = monomials_of_degree(nvars, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  MultiPoly p(nvars);
  p.add_term(Monomial::var(nvars, i), 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  if (m.exponents.size() != nvars)
    throw std::invalid_argument("MultiPoly::monomial: variable count mismatch");
  MultiPoly p(nvars);
  p.add_term(m, c);
  return p;
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly +: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly -: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly *: variable count mismatch");
  MultiPoly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
  return p;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly q(p.nvars_);
  if (c.is_zero()) return q;
  for (const auto& [m, coeff] : p.terms_) q.add_term(m, c * coeff);
  return q;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ &&
         std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

Rational MultiPoly::evaluate(const RationalVector& pt) const {
  if (pt.size() != nvars_) throw std::invalid_argument("evaluate: dimension mismatch");
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m.exponents[i]; ++e) term *= pt[i];
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute_linear(const RationalMatrix& m, const RationalVector& c) const {
  if (m.rows() != nvars_ || c.size() != nvars_)
    throw std::invalid_argument("substitute_linear: dimension mismatch");
  std::size_t k = m.cols();
  // Image of each original variable as a polynomial in the new variables.
  std::vector<MultiPoly> image;
  image.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    MultiPoly li = MultiPoly::constant(k, c[i]);
    for (std::size_t j = 0; j < k; ++j)
      li += m.at(i, j) * MultiPoly::variable(k, j);
    image.push_back(std::move(li));
  }
  // Cache powers per variable up to the largest exponent used.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(MultiPoly::constant(k, 1));
  MultiPoly result(k);
  for (const auto& [mono, coeff] : terms_) {
    MultiPoly term = MultiPoly::constant(k, coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      while (powers[i].size() <= mono.exponents[i])
        powers[i].push_back(powers[i].back() * image[i]);
      if (mono.exponents[i] > 0) term = term * powers[i][mono.exponents[i]];
    }
    result += term;
  }
  return result;
}

RationalVector MultiPoly::coefficients_on(const std::vector<Monomial>& basis) const {
  RationalVector v(basis.size());
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      v[i] = it->second;
      ++found;
    }
  }
  if (found != terms_.size())
    throw std::invalid_argument("coefficients_on: polynomial has terms outside the basis");
  return v;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest-degree terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    bool is_const = m.degree() == 0;
    if (is_const) {
      out << a.str();
    } else {
      if (a != Rational(1)) out << a.str() << "*";
      out << m.str();
    }
  }
  return out.str();
}

}  // namespace grcalc
