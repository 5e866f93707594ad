#include "grcalc/filtration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace grcalc {

void require_distinct(const PointConfig& cfg) {
  std::map<RationalVector, std::size_t> seen;
  for (std::size_t k = 0; k < cfg.points.size(); ++k) {
    if (cfg.points[k].size() != cfg.ambient_dim)
      throw std::invalid_argument("PointConfig: point dimension mismatch");
    if (!seen.emplace(cfg.points[k], k).second)
      throw std::invalid_argument("PointConfig: duplicate points");
  }
}

std::size_t FiltrationProfile::total() const {
  return std::accumulate(gr_dims.begin(), gr_dims.end(), std::size_t{0});
}

FiltrationProfile profile_from_dims(std::vector<std::size_t> dims) {
  FiltrationProfile p;
  p.dims = std::move(dims);
  for (std::size_t i = 0; i < p.dims.size(); ++i)
    p.gr_dims.push_back(i == 0 ? p.dims[0] : p.dims[i] - p.dims[i - 1]);
  while (p.gr_dims.size() > 1 && p.gr_dims.back() == 0) p.gr_dims.pop_back();
  p.top_degree = p.gr_dims.size() - 1;
  return p;
}

std::vector<Monomial> GradedClassBasis::flat() const {
  std::vector<Monomial> out;
  for (const auto& level : per_degree) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<unsigned> GradedClassBasis::class_degrees() const {
  std::vector<unsigned> out;
  for (unsigned d = 0; d < per_degree.size(); ++d)
    out.insert(out.end(), per_degree[d].size(), d);
  return out;
}

std::size_t GradedClassBasis::dim() const {
  std::size_t n = 0;
  for (const auto& level : per_degree) n += level.size();
  return n;
}

RationalVector eval_vector(const Monomial& m, const PointConfig& cfg) {
  RationalVector v(cfg.points.size());
  for (std::size_t k = 0; k < cfg.points.size(); ++k) {
    Rational value = 1;
    for (std::size_t i = 0; i < cfg.ambient_dim; ++i)
      for (unsigned e = 0; e < m.exponents[i]; ++e) value *= cfg.points[k][i];
    v[k] = value;
  }
  return v;
}

RationalVector eval_vector(const MultiPoly& p, const PointConfig& cfg) {
  RationalVector v(cfg.points.size());
  for (std::size_t k = 0; k < cfg.points.size(); ++k) v[k] = p.evaluate(cfg.points[k]);
  return v;
}

std::pair<FiltrationProfile, GradedClassBasis> degree_filtration(const PointConfig& cfg) {
  require_distinct(cfg);
  if (cfg.points.empty()) throw std::invalid_argument("degree_filtration: empty configuration");
  std::size_t n = cfg.points.size();
  RowSpan span(n);
  std::vector<std::size_t> dims;
  GradedClassBasis basis;
  std::size_t cap = 2 * n;
  for (unsigned d = 0;; ++d) {
    if (d > cap) throw std::runtime_error("degree_filtration: failed to stabilize");
    std::vector<Monomial> added;
    for (const auto& m : monomials_of_degree(cfg.ambient_dim, d))
      if (span.insert(eval_vector(m, cfg))) added.push_back(m);
    dims.push_back(span.rank());
    basis.per_degree.push_back(std::move(added));
    if (span.rank() == n) break;
  }
  return {profile_from_dims(std::move(dims)), std::move(basis)};
}

std::vector<RationalVector> filtration_level_basis(const PointConfig& cfg,
                                                   const GradedClassBasis& basis,
                                                   std::size_t level) {
  std::vector<RationalVector> out;
  for (std::size_t d = 0; d <= level && d < basis.per_degree.size(); ++d)
    for (const auto& m : basis.per_degree[d]) out.push_back(eval_vector(m, cfg));
  return out;
}

GradedAlgebra::GradedAlgebra(std::vector<std::size_t> gr_dims, std::vector<unsigned> class_degree)
    : gr_dims_(std::move(gr_dims)), class_degree_(std::move(class_degree)) {}

void GradedAlgebra::set_product(std::size_t a, std::size_t b,
                                std::vector<std::pair<std::size_t, Rational>> terms) {
  constants_[{a, b}] = std::move(terms);
}

const std::vector<std::pair<std::size_t, Rational>>& GradedAlgebra::product_of(
    std::size_t a, std::size_t b) const {
  auto it = constants_.find({a, b});
  return it == constants_.end() ? empty_ : it->second;
}

RationalVector GradedAlgebra::product(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument("GradedAlgebra::product: dimension mismatch");
  RationalVector out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b].is_zero()) continue;
      Rational f = x[a] * y[b];
      for (const auto& [c, coeff] : product_of(a, b)) out[c] += f * coeff;
    }
  }
  return out;
}

bool GradedAlgebra::is_commutative() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b)
      if (product_of(a, b) != product_of(b, a)) return false;
  return true;
}

bool GradedAlgebra::is_associative() const {
  std::size_t n = dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        RationalVector ea(n), eb(n), ec(n);
        ea[a] = 1;
        eb[b] = 1;
        ec[c] = 1;
        RationalVector left = product(product(ea, eb), ec);
        RationalVector right = product(ea, product(eb, ec));
        if (left != right) return false;
      }
  return true;
}

bool GradedAlgebra::unit_law_holds() const {
  for (std::size_t b = 0; b < dim(); ++b) {
    const auto& terms = product_of(0, b);
    if (terms.size() != 1 || terms[0].first != b || terms[0].second != Rational(1)) return false;
  }
  return true;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>
GradedAlgebra::quadruples() const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> out;
  for (const auto& [ab, terms] : constants_)
    for (const auto& [c, value] : terms) out.emplace_back(ab.first, ab.second, c, value);
  return out;
}

namespace {

// Columns are the evaluation vectors of the graded basis monomials; the
// inverse turns function values into class-basis coordinates.
RationalMatrix class_basis_inverse(const PointConfig& cfg, const GradedClassBasis& basis) {
  auto flat = basis.flat();
  std::size_t n = cfg.points.size();
  if (flat.size() != n)
    throw std::invalid_argument("class basis does not match configuration size");
  RationalMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RationalVector col = eval_vector(flat[c], cfg);
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = col[r];
  }
  return inverse(m);
}

}  // namespace

RationalVector expand_in_class_basis(const PointConfig& cfg, const GradedClassBasis& basis,
                                     const RationalVector& values) {
  return class_basis_inverse(cfg, basis).apply(values);
}

GradedAlgebra gr_structure_constants(const PointConfig& cfg, const GradedClassBasis& basis) {
  auto flat = basis.flat();
  auto degrees = basis.class_degrees();
  std::size_t n = flat.size();
  if (n != cfg.points.size())
    throw std::invalid_argument("gr_structure_constants: basis inconsistent with config");
  std::vector<std::size_t> gr_dims;
  for (const auto& level : basis.per_degree) gr_dims.push_back(level.size());
  while (gr_dims.size() > 1 && gr_dims.back() == 0) gr_dims.pop_back();
  GradedAlgebra alg(gr_dims, degrees);

  RationalMatrix inv = class_basis_inverse(cfg, basis);
  std::vector<RationalVector> evals;
  evals.reserve(n);
  for (const auto& m : flat) evals.push_back(eval_vector(m, cfg));

  unsigned top = alg.top_degree();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      unsigned d = degrees[a] + degrees[b];
      if (d > top) continue;  // products above the top degree vanish in Gr
      RationalVector coords = inv.apply(hadamard(evals[a], evals[b]));
      std::vector<std::pair<std::size_t, Rational>> terms;
      for (std::size_t c = 0; c < n; ++c) {
        if (coords[c].is_zero()) continue;
        if (degrees[c] > d)
          throw std::logic_error("gr_structure_constants: product escaped its level");
        if (degrees[c] == d) terms.emplace_back(c, coords[c]);
      }
      alg.set_product(a, b, std::move(terms));
    }
  }
  return alg;
}

Component make_component(PointConfig cfg) {
  Component comp;
  comp.config = std::move(cfg);
  auto [profile, basis] = degree_filtration(comp.config);
  comp.profile = std::move(profile);
  comp.basis = std::move(basis);
  comp.algebra = gr_structure_constants(comp.config, comp.basis);
  return comp;
}

std::size_t ComponentSum::total_dim() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.config.points.size();
  return n;
}

std::vector<std::size_t> ComponentSum::offsets() const {
  std::vector<std::size_t> out;
  std::size_t n = 0;
  for (const auto& c : components) {
    out.push_back(n);
    n += c.config.points.size();
  }
  return out;
}

RationalVector ComponentSum::unit() const {
  RationalVector u(total_dim());
  std::size_t off = 0;
  for (const auto& c : components) {
    u[off] = 1;  // the constant monomial is always the first class
    off += c.config.points.size();
  }
  return u;
}

RationalVector ComponentSum::product(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != total_dim() || y.size() != total_dim())
    throw std::invalid_argument("ComponentSum::product: dimension mismatch");
  RationalVector out(total_dim());
  std::size_t off = 0;
  for (const auto& c : components) {
    std::size_t n = c.config.points.size();
    RationalVector xs(x.begin() + off, x.begin() + off + n);
    RationalVector ys(y.begin() + off, y.begin() + off + n);
    RationalVector ps = c.algebra.product(xs, ys);
    std::copy(ps.begin(), ps.end(), out.begin() + off);
    off += n;
  }
  return out;
}

namespace {

PowerFiltrationResult power_filtration_impl(
    std::size_t ambient, const RationalVector& unit,
    const std::vector<RationalVector>& generators,
    const std::function<RationalVector(const RationalVector&, const RationalVector&)>& mul,
    std::size_t degree_cap) {
  for (const auto& g : generators)
    if (g.size() != ambient)
      throw std::invalid_argument("power_filtration: generators from wrong ambient");
  if (std::find(generators.begin(), generators.end(), unit) == generators.end())
    throw std::invalid_argument("power_filtration: generators must include the unit");
  if (degree_cap == 0) degree_cap = 2 * ambient;

  PowerFiltrationResult res;
  RowSpan span(ambient);
  span.insert(unit);
  std::vector<std::size_t> dims{1};
  res.new_per_level.push_back({unit});
  for (std::size_t level = 1;; ++level) {
    if (level > degree_cap)
      throw std::runtime_error("power_filtration: failed to stabilize within the degree cap");
    std::vector<RationalVector> added;
    for (const auto& g : generators)
      for (const auto& h : res.new_per_level[level - 1]) {
        RationalVector p = mul(g, h);
        if (span.insert(p)) added.push_back(std::move(p));
      }
    bool grew = !added.empty();
    dims.push_back(span.rank());
    res.new_per_level.push_back(std::move(added));
    if (!grew || span.rank() == ambient) break;
  }
  if (res.new_per_level.back().empty()) res.new_per_level.pop_back();
  res.profile = profile_from_dims(std::move(dims));
  return res;
}

}  // namespace

PowerFiltrationResult power_filtration(const PointConfig& cfg,
                                       const std::vector<RationalVector>& generators,
                                       std::size_t degree_cap) {
  std::size_t n = cfg.points.size();
  RationalVector unit(n, Rational(1));
  return power_filtration_impl(n, unit, generators, hadamard,
                               degree_cap ? degree_cap : 2 * n);
}

PowerFiltrationResult power_filtration(const ComponentSum& ambient,
                                       const std::vector<RationalVector>& generators,
                                       std::size_t degree_cap) {
  return power_filtration_impl(
      ambient.total_dim(), ambient.unit(), generators,
      [&ambient](const RationalVector& a, const RationalVector& b) {
        return ambient.product(a, b);
      },
      degree_cap);
}

FeasibilityResult global_representative_feasible(const std::vector<Component>& components,
                                                 const RationalVector& element,
                                                 unsigned degree) {
  if (components.empty())
    throw std::invalid_argument("global_representative_feasible: no components");
  std::size_t ambient = components.front().config.ambient_dim;
  std::size_t total = 0;
  for (const auto& c : components) {
    if (c.config.ambient_dim != ambient)
      throw std::invalid_argument("global_representative_feasible: ambient dimension mismatch");
    total += c.config.points.size();
  }
  if (element.size() != total)
    throw std::invalid_argument("global_representative_feasible: element size mismatch");

  auto monos = monomials_up_to(ambient, degree);
  RationalMatrix a(total, monos.size());
  RationalVector b(total);
  std::size_t row = 0, off = 0;
  for (const auto& comp : components) {
    auto flat = comp.basis.flat();
    std::size_t n = comp.config.points.size();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& pt = comp.config.points[k];
      for (std::size_t j = 0; j < monos.size(); ++j) {
        Rational value = 1;
        for (std::size_t i = 0; i < ambient; ++i)
          for (unsigned e = 0; e < monos[j].exponents[i]; ++e) value *= pt[i];
        a.at(row, j) = value;
      }
      // Prescribed value: the element's class coordinates recombined.
      Rational target;
      for (std::size_t c = 0; c < n; ++c) {
        if (element[off + c].is_zero()) continue;
        Rational value = 1;
        for (std::size_t i = 0; i < ambient; ++i)
          for (unsigned e = 0; e < flat[c].exponents[i]; ++e) value *= pt[i];
        target += element[off + c] * value;
      }
      b[row] = target;
      ++row;
    }
    off += n;
  }

  FeasibilityResult res;
  auto x = affine_feasible(a, b);
  res.feasible = x.has_value();
  if (x) {
    MultiPoly witness(ambient);
    for (std::size_t j = 0; j < monos.size(); ++j)
      witness += MultiPoly::monomial(ambient, monos[j], (*x)[j]);
    res.witness = std::move(witness);
  }
  return res;
}

}  // namespace grcalc
