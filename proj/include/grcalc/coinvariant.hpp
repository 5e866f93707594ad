// Independent oracle for the flag pipelines: closed-form fundamental Weyl
// invariants, graded dimensions of the invariant ideal by exact rank, the
// coinvariant Hilbert function, and the graded-isomorphism verification.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grcalc/filtration.hpp"
#include "grcalc/polyring.hpp"
#include "grcalc/rootsys.hpp"

namespace grcalc {

struct InvariantSet {
  std::vector<MultiPoly> generators;
  std::vector<unsigned> degrees;
};

// Power sums for type A, power sums of squares for B/C, and for D the even
// power sums together with x1*...*xn. Every generator is checked exactly for
// invariance under all simple reflections.
InvariantSet fundamental_invariants(const RootSystem& rs);

struct HilbertFunction {
  std::vector<std::size_t> coefficients;

  std::size_t total() const;
  bool palindromic() const;
};

// Coefficients of the product formula prod_i (1 + q + ... + q^{d_i - 1}).
std::vector<std::size_t> hilbert_product_formula(const std::vector<int>& degrees);

// Graded dimension of S / I_W^+ computed degreewise by exact rank of the
// ideal's spanning set, cross-checked against the product formula.
HilbertFunction coinvariant_hilbert(const RootSystem& rs, std::size_t degree_cap = 64);

struct IsoCheckResult {
  bool pass = false;
  std::string detail;
  std::optional<std::size_t> failing_degree;
};

// PASS certifies Gr C[W.s] = S/I_W^+ degreewise: (a) every fundamental
// invariant is constant on the orbit, (b) the filtration's graded dimensions
// match the coinvariant Hilbert function.
IsoCheckResult verify_graded_iso(const RootSystem& rs, const Orbit& orbit,
                                 const FiltrationProfile& profile);

}  // namespace grcalc
