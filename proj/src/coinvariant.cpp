#include "grcalc/coinvariant.hpp"

#include <numeric>
#include <sstream>

namespace grcalc {

namespace {

MultiPoly power_sum(std::size_t nvars, unsigned k) {
  MultiPoly p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    Monomial m = Monomial::one(nvars);
    m.exponents[i] = k;
    p += MultiPoly::monomial(nvars, m, 1);
  }
  return p;
}

}  // namespace

InvariantSet fundamental_invariants(const RootSystem& rs) {
  std::size_t n = rs.ambient_dim;
  InvariantSet inv;
  switch (rs.family) {
    case Family::A:
      for (unsigned k = 1; k <= n; ++k) inv.generators.push_back(power_sum(n, k));
      break;
    case Family::B:
    case Family::C:
      for (unsigned k = 1; k <= n; ++k) inv.generators.push_back(power_sum(n, 2 * k));
      break;
    case Family::D: {
      for (unsigned k = 1; k + 1 <= n; ++k) inv.generators.push_back(power_sum(n, 2 * k));
      Monomial all = Monomial::one(n);
      for (std::size_t i = 0; i < n; ++i) all.exponents[i] = 1;
      inv.generators.push_back(MultiPoly::monomial(n, all, 1));
      break;
    }
  }
  for (const auto& g : inv.generators) inv.degrees.push_back(g.degree());

  // The degrees must reproduce the root system's invariant degrees as multisets.
  std::vector<int> expect(rs.degrees);
  std::vector<int> got(inv.degrees.begin(), inv.degrees.end());
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  if (expect != got) throw std::logic_error("fundamental_invariants: degree multiset mismatch");

  for (const auto& g : inv.generators)
    for (const auto& s : rs.simple_reflections)
      if (!(apply(s, g) == g))
        throw std::logic_error("fundamental_invariants: generator not invariant");
  return inv;
}

std::size_t HilbertFunction::total() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), std::size_t{0});
}

bool HilbertFunction::palindromic() const {
  std::size_t n = coefficients.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (coefficients[i] != coefficients[n - 1 - i]) return false;
  return true;
}

std::vector<std::size_t> hilbert_product_formula(const std::vector<int>& degrees) {
  std::vector<std::size_t> coeffs{1};
  for (int d : degrees) {
    std::vector<std::size_t> next(coeffs.size() + d - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + k] += coeffs[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

HilbertFunction coinvariant_hilbert(const RootSystem& rs, std::size_t degree_cap) {
  auto formula = hilbert_product_formula(rs.degrees);
  std::size_t top = formula.size() - 1;  // = sum of (d_i - 1)
  if (top + 1 > degree_cap) throw std::runtime_error("coinvariant_hilbert: degree cap exceeded");

  auto inv = fundamental_invariants(rs);
  std::size_t n = rs.ambient_dim;
  HilbertFunction h;
  for (unsigned d = 0; d <= top; ++d) {
    auto basis_d = monomials_of_degree(n, d);
    RowSpan span(basis_d.size());
    for (std::size_t j = 0; j < inv.generators.size(); ++j) {
      if (inv.degrees[j] > d) continue;
      for (const auto& m : monomials_of_degree(n, d - inv.degrees[j])) {
        MultiPoly prod = MultiPoly::monomial(n, m, 1) * inv.generators[j];
        span.insert(prod.coefficients_on(basis_d));
      }
    }
    std::size_t dim_sd = basis_d.size();
    std::size_t coeff = dim_sd - span.rank();
    if (coeff != formula[d])
      throw std::logic_error("coinvariant_hilbert: rank computation disagrees with the product formula");
    h.coefficients.push_back(coeff);
  }
  return h;
}

IsoCheckResult verify_graded_iso(const RootSystem& rs, const Orbit& orbit,
                                 const FiltrationProfile& profile) {
  if (!is_regular(rs, orbit.base_point))
    throw std::invalid_argument("verify_graded_iso: orbit base point is not regular");
  IsoCheckResult res;
  auto inv = fundamental_invariants(rs);
  for (std::size_t j = 0; j < inv.generators.size(); ++j) {
    Rational first = inv.generators[j].evaluate(orbit.points.front());
    for (const auto& p : orbit.points) {
      if (inv.generators[j].evaluate(p) != first) {
        res.pass = false;
        res.detail = "invariant of degree " + std::to_string(inv.degrees[j]) +
                     " is not constant on the orbit";
        return res;
      }
    }
  }
  auto hilbert = coinvariant_hilbert(rs);
  if (profile.gr_dims.size() != hilbert.coefficients.size()) {
    res.pass = false;
    res.failing_degree = std::min(profile.gr_dims.size(), hilbert.coefficients.size());
    res.detail = "graded dimension sequences have different lengths";
    return res;
  }
  for (std::size_t d = 0; d < hilbert.coefficients.size(); ++d) {
    if (profile.gr_dims[d] != hilbert.coefficients[d]) {
      res.pass = false;
      res.failing_degree = d;
      std::ostringstream out;
      out << "gr dimension " << profile.gr_dims[d] << " != Hilbert coefficient "
          << hilbert.coefficients[d] << " at degree " << d;
      res.detail = out.str();
      return res;
    }
  }
  res.pass = true;
  res.detail = "invariants constant on the orbit and gr dimensions match the coinvariant Hilbert function";
  return res;
}

}  // namespace grcalc
