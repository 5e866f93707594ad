// Degree filtrations of function rings on finite point configurations, the
// associated graded algebra with exact structure constants, power filtrations
// generated by F_1, and the global-representative feasibility test.
//
// The graded splitting is fixed once and for all by the greedy graded-lex
// monomial basis; every class extraction and representative test refers to it.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grcalc/exactlin.hpp"
#include "grcalc/polyring.hpp"

namespace grcalc {

struct PointConfig {
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> points;
  std::vector<std::string> labels;  // optional, empty or one per point

  std::size_t size() const { return points.size(); }
};

// Throws std::invalid_argument when two points coincide.
void require_distinct(const PointConfig& cfg);

struct FiltrationProfile {
  std::vector<std::size_t> dims;     // dim F_0, dim F_1, ...
  std::vector<std::size_t> gr_dims;  // successive differences, trailing zeros dropped
  std::size_t top_degree = 0;

  std::size_t total() const;
};

FiltrationProfile profile_from_dims(std::vector<std::size_t> dims);

struct GradedClassBasis {
  // per_degree[j] = monomials whose evaluation classes form a basis of F_j/F_{j-1}.
  std::vector<std::vector<Monomial>> per_degree;

  std::vector<Monomial> flat() const;
  std::vector<unsigned> class_degrees() const;
  std::size_t dim() const;
};

// Evaluation vector of a monomial / polynomial over the configuration points.
RationalVector eval_vector(const Monomial& m, const PointConfig& cfg);
RationalVector eval_vector(const MultiPoly& p, const PointConfig& cfg);

// dim F_i = rank of the evaluation matrix of monomials of degree <= i;
// iteration stops at the first D with dim F_D = |points|.
std::pair<FiltrationProfile, GradedClassBasis> degree_filtration(const PointConfig& cfg);

// Spanning vectors of F_i: evaluation vectors of the graded basis monomials
// of degree <= i (a basis, by construction).
std::vector<RationalVector> filtration_level_basis(const PointConfig& cfg,
                                                   const GradedClassBasis& basis,
                                                   std::size_t level);

class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(std::vector<std::size_t> gr_dims, std::vector<unsigned> class_degree);

  std::size_t dim() const { return class_degree_.size(); }
  std::size_t top_degree() const { return gr_dims_.empty() ? 0 : gr_dims_.size() - 1; }
  const std::vector<std::size_t>& gr_dims() const { return gr_dims_; }
  unsigned degree_of(std::size_t cls) const { return class_degree_.at(cls); }

  void set_product(std::size_t a, std::size_t b,
                   std::vector<std::pair<std::size_t, Rational>> terms);
  const std::vector<std::pair<std::size_t, Rational>>& product_of(std::size_t a,
                                                                  std::size_t b) const;

  // Bilinear extension of the basis products to coordinate vectors.
  RationalVector product(const RationalVector& x, const RationalVector& y) const;

  bool is_commutative() const;
  bool is_associative() const;
  bool unit_law_holds() const;  // class 0 is the constant monomial's class

  // Sparse (a, b, c, value) quadruples in lexicographic order.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> quadruples() const;

 private:
  std::vector<std::size_t> gr_dims_;
  std::vector<unsigned> class_degree_;
  std::map<std::pair<std::size_t, std::size_t>,
           std::vector<std::pair<std::size_t, Rational>>>
      constants_;
  std::vector<std::pair<std::size_t, Rational>> empty_;
};

// Ring structure on Gr: expand each pointwise product of basis classes in the
// filtration basis and keep the top-degree coordinates.
GradedAlgebra gr_structure_constants(const PointConfig& cfg, const GradedClassBasis& basis);

// Coordinates of a function vector (values at the points) in the full graded
// class basis; coordinates are grouped per degree by class_degrees().
RationalVector expand_in_class_basis(const PointConfig& cfg, const GradedClassBasis& basis,
                                     const RationalVector& values);

struct Component {
  PointConfig config;
  FiltrationProfile profile;
  GradedClassBasis basis;
  GradedAlgebra algebra;
};

Component make_component(PointConfig cfg);

// Direct sum of per-component graded algebras; elements are coordinate
// vectors over the concatenation of the components' graded class bases.
struct ComponentSum {
  std::vector<Component> components;

  std::size_t total_dim() const;
  std::vector<std::size_t> offsets() const;  // start index of each component's block
  RationalVector unit() const;
  RationalVector product(const RationalVector& x, const RationalVector& y) const;
};

struct PowerFiltrationResult {
  FiltrationProfile profile;
  // new_per_level[i] = elements that enlarged the span at level i
  // (level 0 holds the unit); together they form a filtration-adapted basis.
  std::vector<std::vector<RationalVector>> new_per_level;
};

// F_0 = span(unit), F_i = F_{i-1} + span{ g*h : g generator, h basis of F_{i-1} },
// products taken pointwise; stops when the dimension stabilizes or exhausts
// the ambient space. Generators must contain the unit (all-ones) vector.
PowerFiltrationResult power_filtration(const PointConfig& cfg,
                                       const std::vector<RationalVector>& generators,
                                       std::size_t degree_cap = 0);

// Same, with products taken through the components' structure constants.
PowerFiltrationResult power_filtration(const ComponentSum& ambient,
                                       const std::vector<RationalVector>& generators,
                                       std::size_t degree_cap = 0);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<MultiPoly> witness;
};

// Is there a polynomial f of degree <= degree on the shared ambient space
// whose restriction to each component, expanded in that component's graded
// class basis, has exactly the coordinates prescribed by element?
FeasibilityResult global_representative_feasible(const std::vector<Component>& components,
                                                 const RationalVector& element,
                                                 unsigned degree);

}  // namespace grcalc
