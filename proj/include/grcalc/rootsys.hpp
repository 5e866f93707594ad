// Root systems of types A, B/C, D realized on signed permutations of Q^n;
// Weyl group enumeration, orbits, regularity, Levi data, length statistics.
//
// Type A_{n-1} acts on the full Q^n by coordinate permutations (the GL_n
// picture), so the degree-1 invariant e1 exists and the coinvariant Hilbert
// series is the full product [1]_q [2]_q ... [n]_q.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grcalc/exactlin.hpp"
#include "grcalc/polyring.hpp"

namespace grcalc {

enum class Family { A, B, C, D };

Family family_from_string(const std::string& s);
std::string to_str(Family f);

// Signed permutation: coordinate i is sent to coordinate perm[i] with sign
// signs[i], i.e. (w.v)[perm[i]] = signs[i] * v[i].
struct WeylElement {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  std::size_t length = 0;

  std::string word() const;  // e.g. "[2 1 3]" or "[2 -1 3]" with signs folded in
  bool operator==(const WeylElement& o) const { return perm == o.perm && signs == o.signs; }
};

WeylElement identity_element(std::size_t n);
WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);
RationalVector apply(const WeylElement& w, const RationalVector& v);
// (w.p)(x) = p(w^{-1} x); monomials map to signed monomials.
MultiPoly apply(const WeylElement& w, const MultiPoly& p);

struct RootSystem {
  Family family;
  int rank;
  std::size_t ambient_dim;
  std::vector<RationalVector> roots;          // closed under negation
  std::vector<RationalVector> simple_roots;
  std::vector<WeylElement> simple_reflections;
  std::vector<int> degrees;                   // fundamental invariant degrees

  mpz_class group_order() const;  // product of degrees
};

RootSystem build_root_system(Family family, int rank);

// Reflection through a root of one of the realized shapes (e_i - e_j,
// e_i + e_j, e_i, 2 e_i, up to sign).
WeylElement reflection_for_root(std::size_t ambient_dim, const RationalVector& root);

// Coxeter length: number of positive roots sent negative (positive means
// first nonzero coordinate > 0, which matches the simple systems above).
std::size_t coxeter_length(const RootSystem& rs, const WeylElement& w);

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

// Breadth-first enumeration from the identity over simple reflections,
// in nondecreasing length order; throws when |W| would exceed the cap.
std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                         std::size_t cap = kDefaultEnumerationCap);

struct Orbit {
  RationalVector base_point;
  std::vector<RationalVector> points;     // discovery order, pairwise distinct
  std::vector<WeylElement> witnesses;     // witnesses[k] maps base_point to points[k]
};

Orbit weyl_orbit(const RootSystem& rs, const RationalVector& v);

bool is_regular(const RootSystem& rs, const RationalVector& v);

// Entry l = number of Weyl elements of length l.
std::vector<std::size_t> length_distribution(const RootSystem& rs,
                                             std::size_t cap = kDefaultEnumerationCap);

struct LeviData {
  std::vector<RationalVector> phi_s;      // roots vanishing on s
  std::vector<WeylElement> w_l;           // subgroup generated by their reflections
  std::vector<WeylElement> coset_reps;    // minimal-length representatives of W_L \ W
};

LeviData levi_decomposition(const RootSystem& rs, const RationalVector& s);

}  // namespace grcalc
