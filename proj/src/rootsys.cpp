#include "grcalc/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace grcalc {

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw input_error("unknown root system family: " + s);
}

std::string to_str(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

std::string WeylElement::word() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out << " ";
    out << (signs[i] < 0 ? "-" : "") << (perm[i] + 1);
  }
  out << "]";
  return out.str();
}

WeylElement identity_element(std::size_t n) {
  WeylElement w;
  w.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.perm[i] = i;
  w.signs.assign(n, 1);
  w.length = 0;
  return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  std::size_t n = a.perm.size();
  if (b.perm.size() != n) throw std::invalid_argument("compose: size mismatch");
  WeylElement c;
  c.perm.resize(n);
  c.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.perm[i] = a.perm[b.perm[i]];
    c.signs[i] = b.signs[i] * a.signs[b.perm[i]];
  }
  return c;
}

WeylElement inverse(const WeylElement& w) {
  std::size_t n = w.perm.size();
  WeylElement r;
  r.perm.resize(n);
  r.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.perm[w.perm[i]] = i;
    r.signs[w.perm[i]] = w.signs[i];
  }
  r.length = w.length;
  return r;
}

RationalVector apply(const WeylElement& w, const RationalVector& v) {
  std::size_t n = w.perm.size();
  if (v.size() != n) throw std::invalid_argument("apply: dimension mismatch");
  RationalVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[w.perm[i]] = w.signs[i] < 0 ? -v[i] : v[i];
  return out;
}

MultiPoly apply(const WeylElement& w, const MultiPoly& p) {
  std::size_t n = w.perm.size();
  if (p.nvars() != n) throw std::invalid_argument("apply: variable count mismatch");
  // (w.p)(x) = p(w^{-1} x) and (w^{-1} x)_i = signs[i] * x[perm[i]].
  MultiPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    Monomial img = Monomial::one(n);
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      img.exponents[w.perm[i]] = m.exponents[i];
      if (w.signs[i] < 0 && m.exponents[i] % 2 == 1) sign = -sign;
    }
    out += MultiPoly::monomial(n, img, sign < 0 ? -c : c);
  }
  return out;
}

mpz_class RootSystem::group_order() const {
  mpz_class order = 1;
  for (int d : degrees) order *= d;
  return order;
}

namespace {

RationalVector unit_vec(std::size_t n, std::size_t i, int v = 1) {
  RationalVector e(n);
  e[i] = v;
  return e;
}

void push_pm(std::vector<RationalVector>& roots, const RationalVector& r) {
  roots.push_back(r);
  RationalVector neg(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
  roots.push_back(neg);
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  if (rank < 1) throw input_error("root system rank must be >= 1");
  if (family == Family::D && rank < 2) throw input_error("type D requires rank >= 2");
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  std::size_t n = (family == Family::A) ? static_cast<std::size_t>(rank) + 1
                                        : static_cast<std::size_t>(rank);
  rs.ambient_dim = n;

  switch (family) {
    case Family::A: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          RationalVector r(n);
          r[i] = 1;
          r[j] = -1;
          push_pm(rs.roots, r);
        }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        RationalVector a(n);
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      for (std::size_t d = 1; d <= n; ++d) rs.degrees.push_back(static_cast<int>(d));
      break;
    }
    case Family::B:
    case Family::C: {
      int long_scale = (family == Family::C) ? 2 : 1;
      for (std::size_t i = 0; i < n; ++i) push_pm(rs.roots, unit_vec(n, i, long_scale));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          RationalVector r(n);
          r[i] = 1;
          r[j] = 1;
          push_pm(rs.roots, r);
          r[j] = -1;
          push_pm(rs.roots, r);
        }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        RationalVector a(n);
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      rs.simple_roots.push_back(unit_vec(n, n - 1, long_scale));
      for (std::size_t d = 1; d <= n; ++d) rs.degrees.push_back(static_cast<int>(2 * d));
      break;
    }
    case Family::D: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          RationalVector r(n);
          r[i] = 1;
          r[j] = 1;
          push_pm(rs.roots, r);
          r[j] = -1;
          push_pm(rs.roots, r);
        }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        RationalVector a(n);
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      RationalVector last(n);
      last[n - 2] = 1;
      last[n - 1] = 1;
      rs.simple_roots.push_back(last);
      for (std::size_t d = 1; d + 1 <= n; ++d) rs.degrees.push_back(static_cast<int>(2 * d));
      rs.degrees.push_back(static_cast<int>(n));
      break;
    }
  }
  for (const auto& a : rs.simple_roots)
    rs.simple_reflections.push_back(reflection_for_root(n, a));
  return rs;
}

WeylElement reflection_for_root(std::size_t ambient_dim, const RationalVector& root) {
  if (root.size() != ambient_dim)
    throw std::invalid_argument("reflection_for_root: dimension mismatch");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < root.size(); ++i)
    if (!root[i].is_zero()) support.push_back(i);
  WeylElement w = identity_element(ambient_dim);
  if (support.size() == 1) {
    // +-e_i or +-2e_i: sign flip.
    w.signs[support[0]] = -1;
  } else if (support.size() == 2 && root[support[0]].abs() == root[support[1]].abs()) {
    std::size_t i = support[0], j = support[1];
    std::swap(w.perm[i], w.perm[j]);
    if (root[i].sign() == root[j].sign()) {
      // e_i + e_j: swap with both signs flipped.
      w.signs[i] = w.signs[j] = -1;
    }
    // e_i - e_j: plain transposition, signs stay +1.
  } else {
    throw std::invalid_argument("reflection_for_root: unrecognized root shape");
  }
  w.length = 0;  // caller assigns Coxeter length when needed
  return w;
}

std::size_t coxeter_length(const RootSystem& rs, const WeylElement& w) {
  std::size_t count = 0;
  for (const auto& alpha : rs.roots) {
    // Positive roots only.
    std::size_t p = 0;
    while (p < alpha.size() && alpha[p].is_zero()) ++p;
    if (p == alpha.size() || alpha[p].sign() < 0) continue;
    RationalVector img = apply(w, alpha);
    std::size_t q = 0;
    while (q < img.size() && img[q].is_zero()) ++q;
    if (q < img.size() && img[q].sign() < 0) ++count;
  }
  return count;
}

namespace {

using ElementKey = std::pair<std::vector<std::size_t>, std::vector<int>>;

ElementKey key_of(const WeylElement& w) { return {w.perm, w.signs}; }

// Breadth-first closure of seeds under right multiplication by generators.
std::vector<WeylElement> bfs_closure(const std::vector<WeylElement>& generators,
                                     std::size_t ambient_dim, std::size_t cap) {
  std::vector<WeylElement> out;
  std::set<ElementKey> seen;
  std::deque<std::size_t> queue;
  WeylElement id = identity_element(ambient_dim);
  seen.insert(key_of(id));
  out.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      WeylElement next = compose(out[cur], g);
      next.length = out[cur].length + 1;
      if (seen.insert(key_of(next)).second) {
        if (out.size() >= cap)
          throw std::runtime_error("group enumeration cap exceeded");
        out.push_back(next);
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t cap) {
  if (rs.group_order() > static_cast<long>(cap))
    throw std::runtime_error("group enumeration cap exceeded");
  auto elements = bfs_closure(rs.simple_reflections, rs.ambient_dim, cap);
  return elements;
}

Orbit weyl_orbit(const RootSystem& rs, const RationalVector& v) {
  if (v.size() != rs.ambient_dim) throw std::invalid_argument("weyl_orbit: dimension mismatch");
  Orbit orbit;
  orbit.base_point = v;
  std::map<RationalVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  orbit.points.push_back(v);
  orbit.witnesses.push_back(identity_element(rs.ambient_dim));
  seen.emplace(v, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : rs.simple_reflections) {
      RationalVector q = apply(s, orbit.points[cur]);
      if (seen.emplace(q, orbit.points.size()).second) {
        WeylElement witness = compose(s, orbit.witnesses[cur]);
        witness.length = coxeter_length(rs, witness);
        orbit.points.push_back(std::move(q));
        orbit.witnesses.push_back(std::move(witness));
        queue.push_back(orbit.points.size() - 1);
      }
    }
  }
  return orbit;
}

bool is_regular(const RootSystem& rs, const RationalVector& v) {
  if (v.size() != rs.ambient_dim) throw std::invalid_argument("is_regular: dimension mismatch");
  for (const auto& alpha : rs.roots)
    if (dot(alpha, v).is_zero()) return false;
  return true;
}

std::vector<std::size_t> length_distribution(const RootSystem& rs, std::size_t cap) {
  auto elements = enumerate_group(rs, cap);
  std::size_t max_len = 0;
  for (const auto& w : elements) max_len = std::max(max_len, w.length);
  std::vector<std::size_t> dist(max_len + 1, 0);
  for (const auto& w : elements) ++dist[w.length];
  return dist;
}

LeviData levi_decomposition(const RootSystem& rs, const RationalVector& s) {
  if (s.size() != rs.ambient_dim)
    throw std::invalid_argument("levi_decomposition: dimension mismatch");
  LeviData levi;
  std::vector<WeylElement> reflections;
  std::set<ElementKey> seen_reflections;
  for (const auto& alpha : rs.roots) {
    if (!dot(alpha, s).is_zero()) continue;
    levi.phi_s.push_back(alpha);
    WeylElement r = reflection_for_root(rs.ambient_dim, alpha);
    if (seen_reflections.insert(key_of(r)).second) reflections.push_back(r);
  }
  levi.w_l = bfs_closure(reflections, rs.ambient_dim, kDefaultEnumerationCap);
  for (auto& u : levi.w_l) u.length = coxeter_length(rs, u);

  // Right cosets W_L w are labeled by w^{-1}.s; BFS order makes the first
  // element seen per coset a minimal-length representative.
  auto elements = enumerate_group(rs);
  std::map<RationalVector, std::size_t> coset_of;
  for (const auto& w : elements) {
    RationalVector label = apply(inverse(w), s);
    if (coset_of.emplace(label, levi.coset_reps.size()).second)
      levi.coset_reps.push_back(w);
  }
  if (levi.coset_reps.size() * levi.w_l.size() != elements.size())
    throw std::logic_error("levi_decomposition: coset count inconsistent");
  return levi;
}

}  // namespace grcalc
