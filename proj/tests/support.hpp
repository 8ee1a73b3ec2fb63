#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "tightsurf/tightsurf.hpp"

namespace testing_support {

using tightsurf::Rational;
using tightsurf::RatMatrix;
using tightsurf::RatVector;

inline RatVector pt(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVector qt(std::initializer_list<const char*> xs) {
  RatVector v;
  for (const char* x : xs) v.push_back(*tightsurf::parse_rational(x));
  return v;
}

struct AffineMap {
  RatMatrix m;
  RatVector t;
};

// Random invertible rational affine map of R^n with small entries.
inline AffineMap random_affine(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  AffineMap a;
  do {
    a.m.assign(n, RatVector(n));
    for (auto& row : a.m)
      for (auto& x : row) x = Rational(num(rng), den(rng));
  } while (sgn(tightsurf::determinant(a.m)) == 0);
  a.t.resize(n);
  for (auto& x : a.t) x = Rational(num(rng), den(rng));
  return a;
}

inline std::vector<RatVector> map_points(const AffineMap& a, const std::vector<RatVector>& pts) {
  std::vector<RatVector> out;
  for (const auto& p : pts) {
    RatVector q = a.t;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += tightsurf::dot(a.m[i], p);
    out.push_back(q);
  }
  return out;
}

inline tightsurf::Embedding map_embedding(const AffineMap& a, const tightsurf::Embedding& e) {
  return tightsurf::apply_affine(e, a.m, a.t);
}

// Connected components of the vertices strictly inside {w.x > c}, joined
// through shared faces; computed by flood fill, independent of the oracle.
inline int count_inside_components(const tightsurf::Embedding& e, const RatVector& w, const Rational& c) {
  const int n = e.surface.num_vertices;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> in(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) in[static_cast<std::size_t>(v)] = tightsurf::dot(w, e.point(v)) > c;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!in[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& f : e.surface.faces) {
        if (std::find(f.begin(), f.end(), u) == f.end()) continue;
        for (int v : f)
          if (in[static_cast<std::size_t>(v)] && comp[static_cast<std::size_t>(v)] < 0) {
            comp[static_cast<std::size_t>(v)] = count;
            stack.push_back(v);
          }
      }
    }
    ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Independent recounts used to check constructions.

inline std::map<tightsurf::Edge, int> edge_uses(const tightsurf::PolySurface& s) {
  std::map<tightsurf::Edge, int> uses;
  for (const auto& f : s.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int u = f[i], v = f[(i + 1) % f.size()];
      ++uses[{std::min(u, v), std::max(u, v)}];
    }
  return uses;
}

inline int count_euler(const tightsurf::PolySurface& s) {
  return s.num_vertices - static_cast<int>(edge_uses(s).size()) + static_cast<int>(s.faces.size());
}

inline std::set<int> once_used_vertices(const tightsurf::PolySurface& s) {
  std::set<int> out;
  for (const auto& [e, k] : edge_uses(s))
    if (k == 1) {
      out.insert(e.first);
      out.insert(e.second);
    }
  return out;
}

// Connected pieces of the graph formed by edges lying on a single face.
inline int count_boundary_pieces(const tightsurf::PolySurface& s) {
  std::map<int, int> parent;
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (const auto& [e, k] : edge_uses(s))
    if (k == 1) {
      parent.try_emplace(e.first, e.first);
      parent.try_emplace(e.second, e.second);
      parent[root(e.first)] = root(e.second);
    }
  int pieces = 0;
  for (auto& [v, p] : parent)
    if (root(v) == v) ++pieces;
  return pieces;
}

// Tightness by the two-piece oracle plus extreme points on the boundary.
inline bool oracle_tight(const tightsurf::Embedding& e) {
  if (!tightsurf::tpp_oracle(e).two_piece) return false;
  const auto bnd = once_used_vertices(e.surface);
  if (bnd.empty()) return true;
  for (int x : tightsurf::extreme_points(e.coords))
    if (!bnd.count(x)) return false;
  return true;
}

struct Trial {
  bool applied = false;
  std::string base;
  tightsurf::Embedding before, after;
};

inline tightsurf::Embedding random_image(const std::string& name, std::mt19937_64& rng) {
  const auto e = tightsurf::build_catalog(name).embedding;
  return map_embedding(random_affine(static_cast<std::size_t>(e.dimension), rng), e);
}

// One attempt at a handle between two random boundary edges of a random
// affine image of a catalog surface; skipped when a precondition fails.
inline Trial random_handle_trial(std::mt19937_64& rng) {
  static const std::vector<std::string> bases{"P2_1", "P2_2", "T2_1", "T2_2", "K2_1", "K2_2", "N3_1", "G2_1", "P2_3", "S2_2", "S2_3"};
  Trial t;
  t.base = bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
  t.before = random_image(t.base, rng);
  std::vector<tightsurf::Edge> bnd;
  for (const auto& [e, k] : edge_uses(t.before.surface))
    if (k == 1) bnd.push_back(e);
  std::uniform_int_distribution<std::size_t> pick(0, bnd.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  auto [a, b] = bnd[pick(rng)];
  auto [c, d] = bnd[pick(rng)];
  if (coin(rng)) std::swap(a, b);
  if (coin(rng)) std::swap(c, d);
  try {
    t.after = tightsurf::attach_handle(t.before, a, b, c, d, coin(rng) == 1);
    t.applied = true;
  } catch (const tightsurf::PreconditionError&) {
  }
  return t;
}

inline const std::vector<tightsurf::Embedding>& closed_punch_bases() {
  static const std::vector<tightsurf::Embedding> bases = [] {
    std::vector<tightsurf::Embedding> out;
    out.push_back(tightsurf::canonical(tightsurf::surfaces::projective_k6()));
    out.push_back(tightsurf::canonical(tightsurf::surfaces::torus_k7()));
    tightsurf::PolySurface tet{4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}};
    out.push_back(tightsurf::canonical(tet));
    return out;
  }();
  return bases;
}

// One attempt at punching a random face with random contact and pivot.
// Empty base names stand for the closed canonical surfaces.
inline Trial random_punch_trial(std::mt19937_64& rng, bool with_closed = true) {
  static const std::vector<std::string> bases{"S2_1", "S2_2", "P2_1", "P2_2", "T2_1", "K2_1", "K2_2", "N3_1", "G2_1", "G2_2", "", "", ""};
  Trial t;
  const std::size_t last = with_closed ? bases.size() - 1 : bases.size() - 4;
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, last)(rng);
  if (bases[k].empty()) {
    const auto& closed = closed_punch_bases();
    const auto& e = closed[std::uniform_int_distribution<std::size_t>(0, closed.size() - 1)(rng)];
    t.base = "closed";
    t.before = map_embedding(random_affine(static_cast<std::size_t>(e.dimension), rng), e);
  } else {
    t.base = bases[k];
    t.before = random_image(t.base, rng);
  }
  tightsurf::PunchOptions opt;
  opt.boundary_contact = std::uniform_int_distribution<int>(0, 2)(rng);
  opt.pivot = std::uniform_int_distribution<int>(0, 2)(rng);
  opt.allow_split = true;
  const std::size_t face = std::uniform_int_distribution<std::size_t>(0, t.before.surface.faces.size() - 1)(rng);
  try {
    t.after = tightsurf::punch_hole(t.before, face, opt);
    t.applied = true;
  } catch (const tightsurf::PreconditionError&) {
  }
  return t;
}

}  // namespace testing_support
