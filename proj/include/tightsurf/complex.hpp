#pragma once

// Polyhedral surfaces stored as lists of vertex cycles, their combinatorial
// classification, rotation systems, and realized embeddings in R^n.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tightsurf/exact.hpp"
#include "tightsurf/graph.hpp"
#include "tightsurf/hull.hpp"

namespace tightsurf {

using Face = std::vector<int>;
using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct PolySurface {
  int num_vertices = 0;
  std::vector<Face> faces;

  friend bool operator==(const PolySurface&, const PolySurface&) = default;
};

struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int boundary_components = 0;
  int euler = 0;
  int components = 1;

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

inline std::string describe(const SurfaceType& t) {
  return std::string(t.orientable ? "orientable" : "non-orientable") + " genus " + std::to_string(t.genus) + ", " +
         std::to_string(t.boundary_components) + " boundary component(s), euler " + std::to_string(t.euler);
}

/// Undirected edges with the faces containing them.
inline std::map<Edge, std::vector<int>> edge_faces(const PolySurface& s) {
  std::map<Edge, std::vector<int>> out;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const auto& face = s.faces[f];
    for (std::size_t i = 0; i < face.size(); ++i)
      out[make_edge(face[i], face[(i + 1) % face.size()])].push_back(static_cast<int>(f));
  }
  return out;
}

inline std::set<Edge> surface_edges(const PolySurface& s) {
  std::set<Edge> out;
  for (const auto& face : s.faces)
    for (std::size_t i = 0; i < face.size(); ++i) out.insert(make_edge(face[i], face[(i + 1) % face.size()]));
  return out;
}

inline int euler_characteristic(const PolySurface& s) {
  return s.num_vertices - static_cast<int>(surface_edges(s).size()) + static_cast<int>(s.faces.size());
}

/// 1-skeleton as a graph on all num_vertices vertices.
inline Graph skeleton_graph(const PolySurface& s) { return Graph(s.num_vertices, surface_edges(s)); }

namespace detail {

inline std::string face_name(std::size_t f) { return "face " + std::to_string(f); }

inline std::string edge_name(const Edge& e) {
  return "edge " + std::to_string(e.first) + "-" + std::to_string(e.second);
}

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Boundary edges are those lying in exactly one face; after validation every
// boundary vertex carries exactly two of them.
inline std::map<int, std::vector<int>> boundary_adjacency(const PolySurface& s) {
  std::map<int, std::vector<int>> adj;
  for (const auto& [e, fs] : edge_faces(s)) {
    if (fs.size() != 1) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  return adj;
}

}  // namespace detail

/// Checks the surface invariants and classifies the complex. Throws
/// SurfaceError naming the offending face, edge or vertex.
inline SurfaceType validate_surface(const PolySurface& s) {
  if (s.num_vertices <= 0) throw SurfaceError("empty complex", "vertex set");
  std::set<std::vector<int>> seen_faces;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const auto& face = s.faces[f];
    if (face.size() < 3) throw SurfaceError("face has fewer than 3 vertices", detail::face_name(f));
    for (int v : face)
      if (v < 0 || v >= s.num_vertices) throw SurfaceError("vertex index out of range", detail::face_name(f));
    std::vector<int> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw SurfaceError("face repeats a vertex", detail::face_name(f));
    if (!seen_faces.insert(sorted).second) throw SurfaceError("duplicate face", detail::face_name(f));
  }

  const auto ef = edge_faces(s);
  for (const auto& [e, fs] : ef)
    if (fs.size() > 2) throw SurfaceError("edge lies in more than two faces", detail::edge_name(e));

  // vertex links: corners (prev, next) must chain into one path or one cycle
  std::vector<std::vector<Edge>> corners(static_cast<std::size_t>(s.num_vertices));
  for (const auto& face : s.faces)
    for (std::size_t i = 0; i < face.size(); ++i) {
      const int prev = face[(i + face.size() - 1) % face.size()];
      const int next = face[(i + 1) % face.size()];
      corners[static_cast<std::size_t>(face[i])].push_back(make_edge(prev, next));
    }
  for (int v = 0; v < s.num_vertices; ++v) {
    const auto& link = corners[static_cast<std::size_t>(v)];
    const std::string name = "vertex " + std::to_string(v);
    if (link.empty()) throw SurfaceError("vertex lies in no face", name);
    std::map<int, int> degree;
    std::map<int, int> parent;
    for (const auto& [a, b] : link) {
      ++degree[a];
      ++degree[b];
      parent.emplace(a, a);
      parent.emplace(b, b);
    }
    auto root = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : link) parent[root(a)] = root(b);
    std::set<int> roots;
    for (const auto& [x, d] : degree) {
      if (d > 2) throw SurfaceError("vertex link is not a path or cycle", name);
      roots.insert(root(x));
    }
    const auto nodes = degree.size();
    if (roots.size() != 1 || (link.size() != nodes && link.size() + 1 != nodes))
      throw SurfaceError("vertex link is not a single path or cycle", name);
  }

  SurfaceType t;
  t.euler = euler_characteristic(s);

  // connected components through shared vertices
  std::vector<int> parent(static_cast<std::size_t>(s.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& face : s.faces)
    for (int v : face) parent[static_cast<std::size_t>(detail::find_root(parent, v))] = detail::find_root(parent, face[0]);
  std::map<int, int> comp_index;
  for (int v = 0; v < s.num_vertices; ++v) comp_index.emplace(detail::find_root(parent, v), static_cast<int>(comp_index.size()));
  const int ncomp = static_cast<int>(comp_index.size());
  auto comp_of = [&](int v) { return comp_index.at(detail::find_root(parent, v)); };

  // per-component Euler characteristic, boundary count and orientability
  std::vector<int> chi(static_cast<std::size_t>(ncomp), 0), bcount(static_cast<std::size_t>(ncomp), 0);
  std::vector<bool> orientable(static_cast<std::size_t>(ncomp), true);
  for (int v = 0; v < s.num_vertices; ++v) ++chi[static_cast<std::size_t>(comp_of(v))];
  for (const auto& [e, fs] : ef) --chi[static_cast<std::size_t>(comp_of(e.first))];
  for (const auto& face : s.faces) ++chi[static_cast<std::size_t>(comp_of(face[0]))];

  // orientation propagation: a shared edge must be traversed in opposite
  // directions by consistently oriented neighbors
  std::vector<int> sign(s.faces.size(), 0);
  auto direction = [&](int f, const Edge& e) {
    const auto& face = s.faces[static_cast<std::size_t>(f)];
    for (std::size_t i = 0; i < face.size(); ++i)
      if (face[i] == e.first && face[(i + 1) % face.size()] == e.second) return 1;
    return -1;
  };
  std::vector<std::vector<std::pair<int, Edge>>> nbrs(s.faces.size());
  for (const auto& [e, fs] : ef)
    if (fs.size() == 2) {
      nbrs[static_cast<std::size_t>(fs[0])].emplace_back(fs[1], e);
      nbrs[static_cast<std::size_t>(fs[1])].emplace_back(fs[0], e);
    }
  for (std::size_t start = 0; start < s.faces.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (const auto& [g, e] : nbrs[static_cast<std::size_t>(f)]) {
        const int want = -sign[static_cast<std::size_t>(f)] * direction(f, e) * direction(g, e);
        if (sign[static_cast<std::size_t>(g)] == 0) {
          sign[static_cast<std::size_t>(g)] = want;
          stack.push_back(g);
        } else if (sign[static_cast<std::size_t>(g)] != want) {
          orientable[static_cast<std::size_t>(comp_of(s.faces[static_cast<std::size_t>(f)][0]))] = false;
        }
      }
    }
  }

  // boundary components
  auto badj = detail::boundary_adjacency(s);
  std::set<int> visited;
  for (const auto& [v, nb] : badj) {
    if (visited.count(v)) continue;
    ++bcount[static_cast<std::size_t>(comp_of(v))];
    int prev = -1, cur = v;
    while (!visited.count(cur)) {
      visited.insert(cur);
      const auto& n2 = badj[cur];
      const int next = n2[0] != prev ? n2[0] : n2[1];
      prev = cur;
      cur = next;
    }
  }

  t.components = ncomp;
  t.genus = 0;
  t.boundary_components = 0;
  t.orientable = true;
  for (int c = 0; c < ncomp; ++c) {
    const auto i = static_cast<std::size_t>(c);
    const int deficit = 2 - chi[i] - bcount[i];
    if (orientable[i]) {
      if (deficit < 0 || deficit % 2 != 0) throw SurfaceError("inconsistent Euler characteristic", "component " + std::to_string(c));
      t.genus += deficit / 2;
    } else {
      t.genus += deficit;
    }
    t.boundary_components += bcount[i];
    t.orientable = t.orientable && orientable[i];
  }
  return t;
}

/// Boundary cycles, each starting at its smallest vertex and heading toward
/// the smaller of that vertex's two boundary neighbors; cycles sorted by start.
inline std::vector<std::vector<int>> boundary_cycles(const PolySurface& s) {
  auto badj = detail::boundary_adjacency(s);
  std::vector<std::vector<int>> cycles;
  std::set<int> visited;
  for (auto& [v, nb] : badj) {
    if (visited.count(v)) continue;
    if (nb.size() != 2) throw SurfaceError("pinched boundary", "vertex " + std::to_string(v));
    std::vector<int> cyc{v};
    visited.insert(v);
    int prev = v;
    int cur = std::min(nb[0], nb[1]);
    while (cur != v) {
      cyc.push_back(cur);
      visited.insert(cur);
      const auto& n2 = badj[cur];
      const int next = n2[0] != prev ? n2[0] : n2[1];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

inline std::set<int> boundary_vertices(const PolySurface& s) {
  std::set<int> out;
  for (const auto& [v, nb] : detail::boundary_adjacency(s)) out.insert(v);
  return out;
}

inline bool all_vertices_on_boundary(const PolySurface& s) {
  return static_cast<int>(boundary_vertices(s).size()) == s.num_vertices;
}

/// True iff `a` and `b` are the same cyclic sequence up to rotation and reversal.
inline bool same_cycle(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Rotation systems

struct RotationSystem {
  std::vector<std::vector<int>> neighbors;  // cyclic order per vertex
};

inline void validate_rotation_system(const RotationSystem& r) {
  const int n = static_cast<int>(r.neighbors.size());
  std::set<Edge> arcs;
  for (int u = 0; u < n; ++u) {
    std::set<int> seen;
    for (int v : r.neighbors[static_cast<std::size_t>(u)]) {
      const std::string where = "row " + std::to_string(u);
      if (v < 0 || v >= n) throw SurfaceError("neighbor index out of range", where);
      if (v == u) throw SurfaceError("vertex lists itself", where);
      if (!seen.insert(v).second) throw SurfaceError("duplicate neighbor " + std::to_string(v), where);
      arcs.emplace(u, v);
    }
  }
  for (const auto& [u, v] : arcs)
    if (!arcs.count({v, u}))
      throw SurfaceError("asymmetric adjacency", "row " + std::to_string(v) + " lacks " + std::to_string(u));
}

/// Face tracing: the dart after (u, v) is (v, w) with w the rotation
/// successor of u around v. The result is closed; faces may repeat vertices
/// when the rotation system does not describe a polyhedral surface.
inline PolySurface trace_faces(const RotationSystem& r) {
  validate_rotation_system(r);
  const int n = static_cast<int>(r.neighbors.size());
  auto successor = [&](int v, int u) {
    const auto& rot = r.neighbors[static_cast<std::size_t>(v)];
    const auto it = std::find(rot.begin(), rot.end(), u);
    const auto i = static_cast<std::size_t>(it - rot.begin());
    return rot[(i + 1) % rot.size()];
  };
  PolySurface s{n, {}};
  std::set<Edge> used;  // directed darts
  for (int u = 0; u < n; ++u)
    for (int v : r.neighbors[static_cast<std::size_t>(u)]) {
      if (used.count({u, v})) continue;
      Face face;
      int a = u, b = v;
      while (!used.count({a, b})) {
        used.emplace(a, b);
        face.push_back(a);
        const int c = successor(b, a);
        a = b;
        b = c;
      }
      s.faces.push_back(std::move(face));
    }
  return s;
}

/// A graph is properly embedded when all its vertices lie on the boundary.
/// `vertex_map[i]` is the surface vertex carrying graph vertex i (identity if empty).
inline bool is_proper_graph_embedding(const PolySurface& s, const Graph& g, const std::vector<int>& vertex_map = {}) {
  if (!vertex_map.empty() && static_cast<int>(vertex_map.size()) != g.num_vertices())
    throw PreconditionError("vertex map size does not match graph");
  auto image = [&](int v) { return vertex_map.empty() ? v : vertex_map[static_cast<std::size_t>(v)]; };
  for (int v = 0; v < g.num_vertices(); ++v)
    if (image(v) < 0 || image(v) >= s.num_vertices)
      throw PreconditionError("graph vertex " + std::to_string(v) + " has no surface vertex");
  const auto edges = surface_edges(s);
  for (const auto& [u, v] : g.edges())
    if (!edges.count(make_edge(image(u), image(v))))
      throw PreconditionError("graph edge " + std::to_string(u) + "-" + std::to_string(v) + " is not a surface edge");
  const auto bnd = boundary_vertices(s);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!bnd.count(image(v))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Embeddings

struct Embedding {
  PolySurface surface;
  std::vector<RatVector> coords;
  int dimension = 0;

  friend bool operator==(const Embedding&, const Embedding&) = default;

  const RatVector& point(int v) const { return coords.at(static_cast<std::size_t>(v)); }
  std::vector<RatVector> face_points(std::size_t f) const {
    std::vector<RatVector> out;
    for (int v : surface.faces.at(f)) out.push_back(point(v));
    return out;
  }
};

inline void check_coordinates(const Embedding& e) {
  if (static_cast<int>(e.coords.size()) != e.surface.num_vertices)
    throw PreconditionError("embedding: coordinate count does not match vertex count");
  for (const auto& p : e.coords)
    if (static_cast<int>(p.size()) != e.dimension) throw PreconditionError("embedding: coordinate length mismatch");
}

/// Null when the face is a planar, strictly convex polygon in the stored
/// cyclic order; otherwise a reason.
inline std::optional<std::string> face_shape_defect(const Embedding& e, std::size_t f) {
  const auto pts = e.face_points(f);
  if (affine_rank(pts) != 2) return "face " + std::to_string(f) + " is not a planar polygon";
  if (pts.size() == 3) return std::nullopt;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!is_extreme(static_cast<int>(i), pts)) return "face " + std::to_string(f) + " is not strictly convex";
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!detail::supports_edge(i, (i + 1) % pts.size(), pts))
      return "face " + std::to_string(f) + " vertices are not in convex cyclic order";
  return std::nullopt;
}

struct EmbeddednessResult {
  bool ok = true;
  std::string reason;
  std::vector<int> faces;  // offending faces, when applicable

  explicit operator bool() const { return ok; }
};

namespace detail {

// Do conv(P) and conv(Q) meet? (no shared vertices)
inline bool hulls_meet(const std::vector<RatVector>& p, const std::vector<RatVector>& q) {
  const std::size_t n = p.front().size();
  // cheap separation by a coordinate slab
  for (std::size_t i = 0; i < n; ++i) {
    auto [pmin, pmax] = std::minmax_element(p.begin(), p.end(), [i](const auto& a, const auto& b) { return a[i] < b[i]; });
    auto [qmin, qmax] = std::minmax_element(q.begin(), q.end(), [i](const auto& a, const auto& b) { return a[i] < b[i]; });
    if ((*pmax)[i] < (*qmin)[i] || (*qmax)[i] < (*pmin)[i]) return false;
  }
  const std::size_t k = p.size() + q.size();
  LinearSystem sys(k);
  sys.set_all_nonnegative();
  RatVector sum_p = zeros(k), sum_q = zeros(k);
  for (std::size_t j = 0; j < p.size(); ++j) sum_p[j] = 1;
  for (std::size_t j = 0; j < q.size(); ++j) sum_q[p.size() + j] = 1;
  sys.add_eq(std::move(sum_p), 1);
  sys.add_eq(std::move(sum_q), 1);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(k);
    for (std::size_t j = 0; j < p.size(); ++j) row[j] = p[j][i];
    for (std::size_t j = 0; j < q.size(); ++j) row[p.size() + j] = -q[j][i];
    sys.add_eq(std::move(row), 0);
  }
  return lp_feasible(sys).feasible;
}

// Do the tangent cones of P and Q at `apex` share a direction outside
// span(line)? `p_rest`/`q_rest` are the vertices not on the shared simplex.
inline bool cones_overlap(const RatVector& apex, const std::vector<RatVector>& p_rest, const std::vector<RatVector>& q_rest,
                          const std::optional<RatVector>& line) {
  const std::size_t n = apex.size();
  const std::size_t k = p_rest.size() + q_rest.size() + (line ? 1 : 0);
  LinearSystem sys(k);
  for (std::size_t j = 0; j < p_rest.size() + q_rest.size(); ++j) sys.set_nonnegative(j);
  RatVector norm = zeros(k);
  for (std::size_t j = 0; j < p_rest.size(); ++j) norm[j] = 1;
  sys.add_eq(std::move(norm), 1);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(k);
    for (std::size_t j = 0; j < p_rest.size(); ++j) row[j] = p_rest[j][i] - apex[i];
    for (std::size_t j = 0; j < q_rest.size(); ++j) row[p_rest.size() + j] = apex[i] - q_rest[j][i];
    if (line) row[k - 1] = (*line)[i];
    sys.add_eq(std::move(row), 0);
  }
  return lp_feasible(sys).feasible;
}

inline bool consecutive_in(const Face& f, int a, int b) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int x = f[i], y = f[(i + 1) % f.size()];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

}  // namespace detail

/// Exact embeddedness: distinct vertex images, planar strictly convex faces,
/// and every pair of realized faces meeting exactly in their shared vertex or edge.
inline EmbeddednessResult check_embeddedness(const Embedding& e) {
  check_coordinates(e);
  const auto& s = e.surface;
  for (int u = 0; u < s.num_vertices; ++u)
    for (int v = u + 1; v < s.num_vertices; ++v)
      if (e.point(u) == e.point(v))
        return {false, "vertices " + std::to_string(u) + " and " + std::to_string(v) + " coincide", {}};
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    if (auto defect = face_shape_defect(e, f)) return {false, *defect, {static_cast<int>(f)}};

  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    for (std::size_t g = f + 1; g < s.faces.size(); ++g) {
      const auto& ff = s.faces[f];
      const auto& fg = s.faces[g];
      std::vector<int> shared;
      for (int v : ff)
        if (std::find(fg.begin(), fg.end(), v) != fg.end()) shared.push_back(v);
      std::vector<RatVector> p_rest, q_rest;
      for (int v : ff)
        if (std::find(shared.begin(), shared.end(), v) == shared.end()) p_rest.push_back(e.point(v));
      for (int v : fg)
        if (std::find(shared.begin(), shared.end(), v) == shared.end()) q_rest.push_back(e.point(v));
      const std::vector<int> pair{static_cast<int>(f), static_cast<int>(g)};
      const std::string tag = "faces " + std::to_string(f) + " and " + std::to_string(g);
      bool bad = false;
      if (shared.empty()) {
        bad = detail::hulls_meet(e.face_points(f), e.face_points(g));
      } else if (shared.size() == 1) {
        bad = detail::cones_overlap(e.point(shared[0]), p_rest, q_rest, std::nullopt);
      } else if (shared.size() == 2) {
        if (!detail::consecutive_in(ff, shared[0], shared[1]) || !detail::consecutive_in(fg, shared[0], shared[1]))
          return {false, tag + " share a diagonal", pair};
        const RatVector mid = Rational(1, 2) * (e.point(shared[0]) + e.point(shared[1]));
        bad = detail::cones_overlap(mid, p_rest, q_rest, e.point(shared[0]) - e.point(shared[1]));
      } else {
        return {false, tag + " share three or more vertices", pair};
      }
      if (bad) return {false, tag + " intersect improperly", pair};
    }
  }
  return {};
}

}  // namespace tightsurf
