#pragma once

// Certification of 0-tightness and tightness for polyhedral embeddings,
// an independent two-piece-property oracle, and the dimension-bound audit.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tightsurf/chromatic.hpp"
#include "tightsurf/complex.hpp"
#include "tightsurf/graph.hpp"
#include "tightsurf/hull.hpp"

namespace tightsurf {

struct ZeroTightWitness {
  std::optional<Edge> missing_hull_edge;         // hull edge not covered by graph segments
  std::optional<int> vertex_outside_neighbor_hull;  // non-extreme vertex violating the neighbor condition
};

struct ZeroTightResult {
  bool zero_tight = false;
  HullSkeleton skeleton;
  ZeroTightWitness witness;
};

namespace detail {

// Is the hull edge [a, b] covered by graph edges between collinear vertices on it?
inline bool edge_covered(int a, int b, const std::vector<RatVector>& pts, const Graph& g) {
  const RatVector dir = pts[static_cast<std::size_t>(b)] - pts[static_cast<std::size_t>(a)];
  std::size_t axis = 0;
  while (sgn(dir[axis]) == 0) ++axis;
  std::vector<std::pair<Rational, int>> chain;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (on_segment(pts[k], pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]))
      chain.emplace_back((pts[k][axis] - pts[static_cast<std::size_t>(a)][axis]) / dir[axis], static_cast<int>(k));
  std::sort(chain.begin(), chain.end());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!g.has_edge(chain[i].second, chain[i + 1].second)) return false;
  return true;
}

}  // namespace detail

/// 0-tightness of a straight-line graph: it contains the hull 1-skeleton
/// (possibly subdivided along collinear vertices) and every non-extreme
/// vertex lies in the hull of its neighbors.
inline ZeroTightResult is_zero_tight_graph(const std::vector<RatVector>& vertices, const std::set<Edge>& edges) {
  if (vertices.empty()) throw PreconditionError("is_zero_tight_graph: no vertices");
  for (std::size_t u = 0; u < vertices.size(); ++u)
    for (std::size_t v = u + 1; v < vertices.size(); ++v)
      if (vertices[u] == vertices[v])
        throw PreconditionError("is_zero_tight_graph: vertices " + std::to_string(u) + " and " + std::to_string(v) + " coincide");
  const Graph g(static_cast<int>(vertices.size()), edges);
  ZeroTightResult res;
  res.skeleton = hull_skeleton(vertices);
  for (const auto& [a, b] : res.skeleton.edges)
    if (!detail::edge_covered(a, b, vertices, g)) {
      res.witness.missing_hull_edge = Edge{a, b};
      return res;
    }
  const std::set<int> extreme(res.skeleton.extreme_vertices.begin(), res.skeleton.extreme_vertices.end());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (extreme.count(v)) continue;
    const auto nbrs = select_points(vertices, g.neighbors(v));
    if (nbrs.empty() || !is_in_hull(vertices[static_cast<std::size_t>(v)], nbrs)) {
      res.witness.vertex_outside_neighbor_hull = v;
      return res;
    }
  }
  res.zero_tight = true;
  return res;
}

/// 0-tightness of an embedded surface with convex faces, via its 1-skeleton.
inline ZeroTightResult is_zero_tight_surface(const Embedding& e) {
  check_coordinates(e);
  for (std::size_t f = 0; f < e.surface.faces.size(); ++f)
    if (auto defect = face_shape_defect(e, f)) throw PreconditionError("is_zero_tight_surface: " + *defect);
  return is_zero_tight_graph(e.coords, surface_edges(e.surface));
}

struct TightnessVerdict {
  bool substantial = false;
  bool zero_tight = false;
  bool tight = false;
  bool closed = false;
  ZeroTightWitness zero_tight_witness;
  std::vector<int> interior_extreme_vertices;  // extreme points off the boundary
  HullSkeleton skeleton;
};

/// Tightness: for a bordered surface, 0-tight with every extreme point on
/// the boundary; for a closed surface, 0-tightness suffices.
inline TightnessVerdict is_tight_surface(const Embedding& e) {
  TightnessVerdict v;
  v.substantial = affine_rank(e.coords) == e.dimension;
  auto zt = is_zero_tight_surface(e);
  v.zero_tight = zt.zero_tight;
  v.zero_tight_witness = zt.witness;
  v.skeleton = std::move(zt.skeleton);
  const auto bnd = boundary_vertices(e.surface);
  v.closed = bnd.empty();
  if (!v.closed)
    for (int x : v.skeleton.extreme_vertices)
      if (!bnd.count(x)) v.interior_extreme_vertices.push_back(x);
  v.tight = v.zero_tight && v.interior_extreme_vertices.empty();
  return v;
}

// ---------------------------------------------------------------------------
// Two-piece-property oracle

/// Open half-space {x : normal . x > threshold}.
struct HalfSpace {
  RatVector normal;
  Rational threshold;
};

struct OracleOptions {
  int random_normals = 200;
  std::uint64_t seed = 0x7167687453ULL;
  int max_vertices = 24;
  int max_dimension = 8;
  std::size_t max_subsets = 250000;
};

struct OracleResult {
  bool two_piece = true;
  std::optional<HalfSpace> witness;   // a half-space whose intersection is disconnected
  std::size_t normals_checked = 0;
  std::size_t half_spaces_checked = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::size_t{1} << 40)) return r;
  }
  return r;
}

// Primitive integer direction with positive leading entry.
inline RatVector primitive_direction(RatVector v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (lead != v.end() && sgn(*lead) < 0)
    for (auto& x : v) x = -x;
  return v;
}

inline void collect_subset_normals(const std::vector<RatVector>& pts, std::size_t n, std::set<RatVector>& out) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t m = pts.size();
  if (m < n) return;
  for (;;) {
    RatMatrix diffs;
    for (std::size_t i = 1; i < n; ++i) diffs.push_back(pts[idx[i]] - pts[idx[0]]);
    auto ns = nullspace(std::move(diffs), n);
    if (ns.size() == 1) out.insert(primitive_direction(std::move(ns.front())));
    // next combination
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Components of the complex restricted to the vertices flagged inside;
// two inside vertices are adjacent when they share a face.
inline int components_inside(const PolySurface& s, const std::vector<bool>& inside) {
  std::vector<int> parent(static_cast<std::size_t>(s.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& face : s.faces) {
    int first = -1;
    for (int v : face) {
      if (!inside[static_cast<std::size_t>(v)]) continue;
      if (first < 0) {
        first = v;
        continue;
      }
      parent[static_cast<std::size_t>(find_root(parent, v))] = find_root(parent, first);
    }
  }
  std::set<int> roots;
  for (int v = 0; v < s.num_vertices; ++v)
    if (inside[static_cast<std::size_t>(v)]) roots.insert(find_root(parent, v));
  return static_cast<int>(roots.size());
}

}  // namespace detail

/// Brute-force two-piece-property check over a finite family of open
/// half-spaces: normals of hyperplanes spanned by n-subsets of vertices,
/// coordinate axes, and seeded random integer normals; thresholds between
/// consecutive projection values (and below the minimum), both orientations.
inline OracleResult tpp_oracle(const Embedding& e, const OracleOptions& opt = {}) {
  check_coordinates(e);
  const auto& s = e.surface;
  const auto n = static_cast<std::size_t>(e.dimension);
  if (s.num_vertices > opt.max_vertices || e.dimension > opt.max_dimension)
    throw ScaleError("tpp_oracle: instance exceeds desk-scale cap (" + std::to_string(opt.max_vertices) + " vertices, dimension " +
                     std::to_string(opt.max_dimension) + ")");
  if (detail::binomial(static_cast<std::size_t>(s.num_vertices), n) > opt.max_subsets)
    throw ScaleError("tpp_oracle: too many spanning subsets");

  std::set<RatVector> normals;
  if (n > 0) detail::collect_subset_normals(e.coords, n, normals);
  for (std::size_t i = 0; i < n; ++i) normals.insert(unit_vector(n, i));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coef(-12, 12);
  for (int r = 0; r < opt.random_normals && n > 0; ++r) {
    RatVector w(n);
    for (auto& x : w) x = coef(rng);
    if (!is_zero(w)) normals.insert(detail::primitive_direction(std::move(w)));
  }

  OracleResult res;
  res.seed = opt.seed;
  std::vector<bool> inside(static_cast<std::size_t>(s.num_vertices));
  for (const auto& w : normals) {
    ++res.normals_checked;
    std::vector<Rational> proj(static_cast<std::size_t>(s.num_vertices));
    for (int v = 0; v < s.num_vertices; ++v) proj[static_cast<std::size_t>(v)] = dot(w, e.point(v));
    std::vector<Rational> levels = proj;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<Rational> thresholds{levels.front() - 1};
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) thresholds.push_back((levels[i] + levels[i + 1]) / 2);
    for (int orient : {1, -1}) {
      for (const auto& c : thresholds) {
        // orient = -1 flips to {w.x < c}; the "below minimum" level then is empty
        ++res.half_spaces_checked;
        for (int v = 0; v < s.num_vertices; ++v)
          inside[static_cast<std::size_t>(v)] = orient > 0 ? proj[static_cast<std::size_t>(v)] > c : proj[static_cast<std::size_t>(v)] < c;
        if (detail::components_inside(s, inside) > 1) {
          res.two_piece = false;
          res.witness = HalfSpace{orient > 0 ? w : Rational(-1) * w, orient > 0 ? c : Rational(-c)};
          return res;
        }
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Dimension-bound audit

struct AuditStep {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct AuditReport {
  bool passed = false;
  int n = 0;
  ChromaticAnswer c0;
  std::optional<SubdivisionWitness> subdivision;  // branch vertices as embedding indices
  std::vector<AuditStep> steps;

  const AuditStep* failed_step() const {
    for (const auto& s : steps)
      if (!s.passed) return &s;
    return nullptr;
  }
};

/// Replays the chain: hull skeleton inside the surface, extreme points on the
/// boundary (a proper embedding), a K_{n+1} subdivision in the hull
/// skeleton, and n + 1 <= c_0(S_p).
inline AuditReport theorem1_audit(const Embedding& e, const ClosedSurfaceId& closed, int p) {
  AuditReport rep;
  rep.n = e.dimension;
  rep.c0 = relative_chromatic(closed, p);
  const auto verdict = is_tight_surface(e);

  auto add = [&rep](std::string id, std::string desc, bool ok, std::string detail) {
    rep.steps.push_back({std::move(id), std::move(desc), ok, std::move(detail)});
    return ok;
  };
  auto finish = [&rep] {
    rep.passed = std::all_of(rep.steps.begin(), rep.steps.end(), [](const AuditStep& s) { return s.passed; });
    return rep;
  };

  if (!add("precondition", "embedding is tight and substantial", verdict.tight && verdict.substantial,
           std::string("tight=") + (verdict.tight ? "true" : "false") + " substantial=" + (verdict.substantial ? "true" : "false")))
    return finish();

  const bool contained = !verdict.zero_tight_witness.missing_hull_edge;
  add("a", "hull 1-skeleton is contained in the surface", contained,
      contained ? std::to_string(verdict.skeleton.edges.size()) + " hull edges covered"
                : "missing hull edge " + std::to_string(verdict.zero_tight_witness.missing_hull_edge->first) + "-" +
                      std::to_string(verdict.zero_tight_witness.missing_hull_edge->second));

  const auto bnd = boundary_vertices(e.surface);
  std::vector<int> off;
  for (int x : verdict.skeleton.extreme_vertices)
    if (!bnd.count(x)) off.push_back(x);
  add("b", "hull skeleton vertices lie on the boundary (proper embedding)", off.empty(),
      off.empty() ? std::to_string(verdict.skeleton.extreme_vertices.size()) + " extreme vertices on the boundary"
                  : "extreme vertex " + std::to_string(off.front()) + " is interior");

  const auto& ev = verdict.skeleton.extreme_vertices;
  std::map<int, int> local;
  for (std::size_t i = 0; i < ev.size(); ++i) local[ev[i]] = static_cast<int>(i);
  Graph hull_graph(static_cast<int>(ev.size()));
  for (const auto& [a, b] : verdict.skeleton.edges) hull_graph.add_edge(local[a], local[b]);
  auto sub = find_complete_subdivision(hull_graph, e.dimension + 1);
  if (sub) {
    for (auto& b : sub->branch) b = ev[static_cast<std::size_t>(b)];
    for (auto& path : sub->paths)
      for (auto& v : path) v = ev[static_cast<std::size_t>(v)];
  }
  add("c", "hull skeleton contains a subdivision of K_{n+1}", sub.has_value(),
      sub ? "branch vertices found for K_" + std::to_string(e.dimension + 1) : "no K_" + std::to_string(e.dimension + 1) + " subdivision");
  rep.subdivision = std::move(sub);

  add("d", "n + 1 <= c_0(S_p)", e.dimension + 1 <= rep.c0.upper,
      std::to_string(e.dimension + 1) + " <= " + std::to_string(rep.c0.upper));
  return finish();
}

}  // namespace tightsurf
