// Flag variety pipelines: the regular one-parameter case (orbit filtration,
// coinvariant oracle, Chern functions) and the non-regular case (Levi
// components, component rings, Chern elements, power filtration, and the
// global-representative feasibility checks).

#pragma once

#include <optional>
#include <vector>

#include "grcalc/coinvariant.hpp"
#include "grcalc/filtration.hpp"
#include "grcalc/report.hpp"
#include "grcalc/rootsys.hpp"

namespace grcalc {

struct FlagInput {
  RootSystem rs;
  RationalVector s;                      // filtration-defining direction
  std::optional<RationalVector> t;       // auxiliary regular element (non-regular case)
  std::vector<RationalVector> lambdas;   // defaults to coordinate weights e_1..e_n
  std::size_t degree_cap = 0;            // 0: module default

  std::vector<RationalVector> lambda_basis() const;
};

// Values of the Chern function f_lambda over the orbit points: f_lambda is
// the restriction of the linear form p -> -<lambda, p>, so its value at the
// fixed point labeled by w (the orbit point w^{-1}.s) is -<w.lambda, s>.
RationalVector chern_function_regular(const RootSystem& rs, const RationalVector& lambda,
                                      const RationalVector& s, const Orbit& orbit);

struct ChernElement {
  RationalVector lambda;
  std::vector<Rational> degree0;          // per component: -<lambda, w^{-1}.s>
  std::vector<RationalVector> degree1;    // per component: Gr_1 class coordinates

  // Coordinates in the direct sum of the components' graded class bases.
  RationalVector flatten(const ComponentSum& sum) const;
};

struct NonregularRing {
  LeviData levi;
  std::vector<RationalVector> component_x;  // shared first-block value w^{-1}.s
  ComponentSum sum;
  std::vector<ChernElement> cherns;
};

// Builds the diagonal orbit of (s, t), groups points into components by the
// first block, computes each component's filtration and Gr ring, and the
// Chern element of every lambda in the basis.
NonregularRing nonregular_ring(const FlagInput& input);

// Full pipeline report; dispatches on regularity of s.
Report flag_report(const FlagInput& input);

}  // namespace grcalc
