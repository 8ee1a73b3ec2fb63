#pragma once

// Operators that build tight polyhedral embeddings: the simplex (canonical)
// realization of a complete-graph triangulation, handle adjunction inside a
// tetrahedron, and hole punching inside a triangular face. Each operator
// re-verifies its postconditions and throws ConstructionError rather than
// return a bad embedding.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tightsurf/complex.hpp"
#include "tightsurf/hull.hpp"
#include "tightsurf/tightness.hpp"

namespace tightsurf {

/// Standard simplex vertex i in R^n: the origin for i = 0, e_i otherwise.
inline RatVector simplex_vertex(int n, int i) {
  return i == 0 ? zeros(static_cast<std::size_t>(n)) : unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1));
}

inline std::vector<RatVector> simplex_vertices(int n) {
  std::vector<RatVector> out;
  for (int i = 0; i <= n; ++i) out.push_back(simplex_vertex(n, i));
  return out;
}

/// Summary of the properties the operators promise to preserve.
struct EmbeddingProfile {
  SurfaceType type;
  bool embedded = false;
  bool zero_tight = false;
  bool tight = false;
  bool substantial = false;
  bool vertices_on_boundary = false;
  std::vector<int> extreme;
};

inline EmbeddingProfile profile(const Embedding& e) {
  EmbeddingProfile p;
  p.type = validate_surface(e.surface);
  p.embedded = check_embeddedness(e).ok;
  if (p.embedded) {
    const auto v = is_tight_surface(e);
    p.zero_tight = v.zero_tight;
    p.tight = v.tight;
    p.substantial = v.substantial;
    p.extreme = v.skeleton.extreme_vertices;
  }
  p.vertices_on_boundary = all_vertices_on_boundary(e.surface);
  return p;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

inline void check_vertex(const Embedding& e, int v) {
  if (v < 0 || v >= e.surface.num_vertices) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

// Validates and profiles, turning any failure into a ConstructionError.
inline EmbeddingProfile verified_profile(const Embedding& e, const std::string& op) {
  try {
    auto p = profile(e);
    require(p.embedded, op + ": result is not embedded (" + check_embeddedness(e).reason + ")");
    return p;
  } catch (const SurfaceError& err) {
    throw ConstructionError(op + ": result is not a surface: " + err.what());
  }
}

// Shared postconditions of the Euler-characteristic-lowering operators.
inline void check_preserved(const EmbeddingProfile& before, const EmbeddingProfile& after, const std::string& op) {
  require(after.type.euler == before.type.euler - 1, op + ": Euler characteristic did not drop by one");
  if (before.zero_tight) require(after.zero_tight, op + ": 0-tightness lost");
  // a closed input only promises 0-tightness: its extreme vertices may stay interior
  if (before.tight && before.type.boundary_components > 0) require(after.tight, op + ": tightness lost");
  if (before.vertices_on_boundary) require(after.vertices_on_boundary, op + ": a vertex left the boundary");
  if (before.embedded && before.zero_tight) require(after.extreme == before.extreme, op + ": extreme point set changed");
}

inline void check_in_neighbor_hull(const Embedding& e, int v, const std::string& op) {
  const Graph g = skeleton_graph(e.surface);
  const auto nbrs = select_points(e.coords, g.neighbors(v));
  require(is_in_hull(e.point(v), nbrs), op + ": new vertex " + std::to_string(v) + " is not in the hull of its neighbors");
}

}  // namespace detail

/// Realizes a triangulation whose 1-skeleton is K_{n+1} on the standard
/// n-simplex. Bordered input must have every vertex on the boundary.
inline Embedding canonical(const PolySurface& s) {
  const auto type = validate_surface(s);
  const int n = s.num_vertices - 1;
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    if (s.faces[f].size() != 3) throw PreconditionError("canonical: face " + std::to_string(f) + " is not a triangle");
  const auto edges = surface_edges(s);
  if (static_cast<int>(edges.size()) != s.num_vertices * n / 2)
    throw PreconditionError("canonical: 1-skeleton is not a complete graph");
  if (type.boundary_components > 0 && !all_vertices_on_boundary(s))
    throw PreconditionError("canonical: complete graph is not properly embedded (interior vertex)");
  Embedding e{s, simplex_vertices(n), n};
  const auto p = detail::verified_profile(e, "canonical");
  detail::require(p.tight && p.substantial, "canonical: realization is not tight and substantial");
  return e;
}

/// Open tetrahedron abcd meets the realized surface?
inline bool tetrahedron_meets_surface(const Embedding& e, const std::array<int, 4>& t) {
  std::vector<RatVector> corners;
  for (int v : t) corners.push_back(e.point(v));
  const auto n = static_cast<std::size_t>(e.dimension);
  for (std::size_t f = 0; f < e.surface.faces.size(); ++f) {
    const auto pts = e.face_points(f);
    const std::size_t k = pts.size();
    // face weights lambda >= 0 (sum 1), tetrahedron weights mu > 0 (sum 1)
    LinearSystem sys(k + 4);
    for (std::size_t j = 0; j < k; ++j) sys.set_nonnegative(j);
    RatVector sum_l = zeros(k + 4), sum_m = zeros(k + 4);
    for (std::size_t j = 0; j < k; ++j) sum_l[j] = 1;
    for (std::size_t j = 0; j < 4; ++j) sum_m[k + j] = 1;
    sys.add_eq(std::move(sum_l), 1);
    sys.add_eq(std::move(sum_m), 1);
    for (std::size_t j = 0; j < 4; ++j) sys.add_gt(unit_vector(k + 4, k + j), 0);
    for (std::size_t i = 0; i < n; ++i) {
      RatVector row(k + 4);
      for (std::size_t j = 0; j < k; ++j) row[j] = pts[j][i];
      for (std::size_t j = 0; j < 4; ++j) row[k + j] = -corners[j][i];
      sys.add_eq(std::move(row), 0);
    }
    if (lp_feasible(sys).feasible) return true;
  }
  return false;
}

/// Glues a band between boundary edges [ab] and [cd] inside tetrahedron
/// abcd. New vertices e = (2a+b+2c+d)/6 and f = (a+2b+c+2d)/6; triangles
/// {a,e,f}, {a,f,b}, {e,c,d}, {e,d,f}. `swap_ab` exchanges a and b first,
/// which flips the band's twist relative to the surface.
inline Embedding attach_handle(const Embedding& in, int a, int b, int c, int d, bool swap_ab = false) {
  const std::string op = "attach_handle";
  for (int v : {a, b, c, d}) detail::check_vertex(in, v);
  if (std::set<int>{a, b, c, d}.size() != 4) throw PreconditionError(op + ": a, b, c, d must be distinct");
  if (swap_ab) std::swap(a, b);
  const auto ef = edge_faces(in.surface);
  for (const auto& [u, v] : {std::pair{a, b}, std::pair{c, d}}) {
    const auto it = ef.find(make_edge(u, v));
    if (it == ef.end() || it->second.size() != 1)
      throw PreconditionError(op + ": [" + std::to_string(u) + "," + std::to_string(v) + "] is not a boundary edge");
  }
  const std::vector<RatVector> corners{in.point(a), in.point(b), in.point(c), in.point(d)};
  if (affine_rank(corners) != 3) throw PreconditionError(op + ": tetrahedron abcd is degenerate");
  if (tetrahedron_meets_surface(in, {a, b, c, d}))
    throw PreconditionError(op + ": the open tetrahedron abcd meets the surface");

  const auto before = detail::verified_profile(in, op);
  Embedding out = in;
  const int ve = out.surface.num_vertices;
  const int vf = ve + 1;
  const std::array<Rational, 4> we{2, 1, 2, 1}, wf{1, 2, 1, 2};
  out.coords.push_back(barycentric_point(we, corners));
  out.coords.push_back(barycentric_point(wf, corners));
  out.surface.num_vertices += 2;
  out.surface.faces.push_back({a, ve, vf});
  out.surface.faces.push_back({a, vf, b});
  out.surface.faces.push_back({ve, c, d});
  out.surface.faces.push_back({ve, d, vf});

  detail::require(is_in_hull(out.point(ve), std::vector<RatVector>{out.point(a), out.point(c), out.point(vf)}),
                  op + ": e is not in the hull of a, c, f");
  detail::require(is_in_hull(out.point(vf), std::vector<RatVector>{out.point(b), out.point(d), out.point(ve)}),
                  op + ": f is not in the hull of b, d, e");
  const auto after = detail::verified_profile(out, op);
  detail::check_preserved(before, after, op);
  return out;
}

/// Removes one face; its vertices must not already lie on the boundary
/// (that would pinch the surface).
inline Embedding remove_face(const Embedding& in, std::size_t face) {
  if (face >= in.surface.faces.size()) throw PreconditionError("remove_face: face index out of range");
  const auto bnd = boundary_vertices(in.surface);
  for (int v : in.surface.faces[face])
    if (bnd.count(v)) throw PreconditionError("remove_face: vertex " + std::to_string(v) + " is already on the boundary");
  Embedding out = in;
  out.surface.faces.erase(out.surface.faces.begin() + static_cast<std::ptrdiff_t>(face));
  detail::verified_profile(out, "remove_face");
  return out;
}

/// Splits polygon `face` along the chord from its first to its third
/// vertex; the triangle is placed at index `face`, the remainder appended.
inline Embedding split_face(const Embedding& in, std::size_t face) {
  if (face >= in.surface.faces.size()) throw PreconditionError("split_face: face index out of range");
  const Face f = in.surface.faces[face];
  if (f.size() < 4) throw PreconditionError("split_face: face is already a triangle");
  if (surface_edges(in.surface).count(make_edge(f[0], f[2])))
    throw PreconditionError("split_face: chord is already an edge");
  Embedding out = in;
  out.surface.faces[face] = {f[0], f[1], f[2]};
  Face rest{f[0]};
  rest.insert(rest.end(), f.begin() + 2, f.end());
  out.surface.faces.push_back(std::move(rest));
  return out;
}

struct PunchOptions {
  int boundary_contact = 0;  // face vertices joined to the new boundary: 0, 1 or 2
  int pivot = 0;             // contact vertices start at this position in the face
  bool allow_split = false;  // split a polygonal face into a triangle first
};

/// Cuts a triangular hole inside triangle `face`.
///  contact 0: three interior points, annulus of six triangles, hole xyz;
///  contact 1: hole a-y-z touching face vertex a;
///  contact 2: hole a-b-z touching the face edge ab.
/// Contact vertices must be interior vertices of the surface.
inline Embedding punch_hole(const Embedding& in, std::size_t face, const PunchOptions& opt = {}) {
  const std::string op = "punch_hole";
  if (face >= in.surface.faces.size()) throw PreconditionError(op + ": face index out of range");
  if (opt.boundary_contact < 0 || opt.boundary_contact > 2) throw PreconditionError(op + ": boundary_contact must be 0, 1 or 2");
  Embedding base = in;
  if (base.surface.faces[face].size() != 3) {
    if (!opt.allow_split) throw PreconditionError(op + ": face " + std::to_string(face) + " is not a triangle");
    base = split_face(base, face);
  }
  Face tri = base.surface.faces[face];
  const int shift = ((opt.pivot % 3) + 3) % 3;
  std::rotate(tri.begin(), tri.begin() + shift, tri.end());
  const int a = tri[0], b = tri[1], c = tri[2];
  const auto bnd = boundary_vertices(base.surface);
  const std::vector<int> contacts(tri.begin(), tri.begin() + opt.boundary_contact);
  for (int v : contacts)
    if (bnd.count(v)) throw PreconditionError(op + ": contact vertex " + std::to_string(v) + " is already on the boundary");

  const auto before = detail::verified_profile(in, op);
  const std::vector<RatVector> corners{base.point(a), base.point(b), base.point(c)};
  auto at = [&](int wa, int wb, int wc) {
    const std::array<Rational, 3> w{wa, wb, wc};
    return barycentric_point(w, corners);
  };

  Embedding out = base;
  auto& faces = out.surface.faces;
  faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(face));
  auto add_vertex = [&](RatVector p) {
    out.coords.push_back(std::move(p));
    return out.surface.num_vertices++;
  };
  std::vector<int> fresh;
  switch (opt.boundary_contact) {
    case 0: {
      const int x = add_vertex(at(5, 2, 2)), y = add_vertex(at(2, 5, 2)), z = add_vertex(at(2, 2, 5));
      faces.insert(faces.end(), {{a, b, x}, {b, y, x}, {b, c, y}, {c, z, y}, {c, a, z}, {a, x, z}});
      fresh = {x, y, z};
      break;
    }
    case 1: {
      const int y = add_vertex(at(2, 5, 2)), z = add_vertex(at(2, 2, 5));
      faces.insert(faces.end(), {{a, b, y}, {b, c, y}, {c, z, y}, {c, a, z}});
      fresh = {y, z};
      break;
    }
    default: {
      const int z = add_vertex(at(1, 1, 1));
      faces.insert(faces.end(), {{b, c, z}, {c, a, z}});
      fresh = {z};
      break;
    }
  }
  for (int v : fresh) detail::check_in_neighbor_hull(out, v, op);
  const auto after = detail::verified_profile(out, op);
  detail::require(after.type.boundary_components == before.type.boundary_components + 1, op + ": boundary count did not grow by one");
  detail::check_preserved(before, after, op);
  const auto new_bnd = boundary_vertices(out.surface);
  for (int v : fresh) detail::require(new_bnd.count(v) != 0, op + ": new vertex off the boundary");
  for (int v : contacts) detail::require(new_bnd.count(v) != 0, op + ": contact vertex not on the boundary");
  return out;
}

/// Image under x -> M x + t (M must be invertible).
inline Embedding apply_affine(const Embedding& in, const RatMatrix& m, const RatVector& t) {
  const auto n = static_cast<std::size_t>(in.dimension);
  if (m.size() != n || t.size() != n) throw PreconditionError("apply_affine: dimension mismatch");
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("apply_affine: matrix is not square");
  if (sgn(determinant(m)) == 0) throw PreconditionError("apply_affine: singular matrix");
  Embedding out = in;
  for (auto& p : out.coords) {
    RatVector q = t;
    for (std::size_t i = 0; i < n; ++i) q[i] += dot(m[i], p);
    p = std::move(q);
  }
  return out;
}

}  // namespace tightsurf
