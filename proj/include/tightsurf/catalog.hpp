#pragma once

// Named tight embeddings of bordered surfaces, one family per closed
// surface: S2 (sphere), P2 (projective plane), T2 (torus), K2 (Klein
// bottle), N3 (three crosscaps), G2 (orientable genus 2). "X_p" is the
// closed surface with p disks removed; p <= 8.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tightsurf/chromatic.hpp"
#include "tightsurf/constructions.hpp"

namespace tightsurf {

struct CatalogEntry {
  std::string name;
  ClosedSurfaceId closed;
  int p = 0;
  SurfaceType expected;
  int dimension = 0;
  int c0 = 0;
  std::vector<int> labels;  // display label of each vertex
  std::string recipe;
};

struct CatalogBuild {
  Embedding embedding;
  CatalogEntry entry;
};

namespace surfaces {

/// Möbius band triangulated by K5.
inline PolySurface moebius_k5() { return {5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}}}; }

/// Closed projective plane triangulated by K6 (half icosahedron).
inline PolySurface projective_k6() {
  return {6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}}};
}

/// Rotation system of K7 on the torus: neighbor i + (1, 3, 2, 6, 4, 5) mod 7.
inline RotationSystem torus_k7_rotation() {
  RotationSystem r;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> row;
    for (int d : {1, 3, 2, 6, 4, 5}) row.push_back((i + d) % 7);
    r.neighbors.push_back(row);
  }
  return r;
}

inline PolySurface torus_k7() { return trace_faces(torus_k7_rotation()); }

/// K8 in the genus-2 surface, rows as published except for vertex 6.
inline RotationSystem genus2_k8_rotation(bool verbatim = false) {
  RotationSystem r;
  r.neighbors = {
      {2, 7, 3, 1, 4, 5, 6}, {7, 6, 5, 2, 4, 0, 3}, {4, 1, 5, 3, 6, 7, 0}, {1, 0, 7, 4, 6, 2, 5},
      {6, 3, 7, 5, 0, 1, 2}, {3, 2, 1, 6, 0, 4, 7}, {0, 5, 1, 7, 2, 3, 4}, {5, 4, 3, 0, 2, 6, 1},
  };
  // the published row for 6 lists 2 twice and omits 1
  if (verbatim) r.neighbors[6] = {0, 5, 2, 7, 2, 3, 4};
  return r;
}

inline PolySurface genus2_k8() { return trace_faces(genus2_k8_rotation()); }

/// Klein bottle carrying K6 (labels 1..6 stored as 0..5): eight triangles
/// and a hexagon 1-4-5-3-4-6 through which vertex 4 passes twice. Only the
/// triangles are returned.
inline PolySurface klein_k6_triangles() {
  return {6, {{0, 1, 3}, {0, 1, 4}, {0, 2, 4}, {0, 2, 5}, {1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {3, 4, 5}}};
}

/// Three-crosscap surface carrying K7 (labels 1..7 stored as 0..6): twelve
/// triangles and a hexagon 1-2-5-7-2-3 through vertex 2 twice.
inline PolySurface n3_k7_triangles() {
  return {7,
          {{0, 1, 3}, {0, 2, 5}, {0, 3, 6}, {0, 4, 5}, {0, 4, 6}, {1, 2, 4}, {1, 3, 5}, {1, 5, 6}, {2, 3, 4},
           {2, 3, 6}, {2, 5, 6}, {3, 4, 5}}};
}

}  // namespace surfaces

namespace detail {

inline std::size_t find_face(const PolySurface& s, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    Face g = s.faces[f];
    std::sort(g.begin(), g.end());
    if (g == verts) return f;
  }
  throw ConstructionError("catalog: missing face");
}

// Punch a triangle given by its vertices; contacts come first in `verts`.
inline Embedding punch_at(const Embedding& e, const std::vector<int>& verts, int contact) {
  const std::size_t f = find_face(e.surface, verts);
  const Face& face = e.surface.faces[f];
  PunchOptions opt;
  opt.boundary_contact = contact;
  opt.pivot = static_cast<int>(std::find(face.begin(), face.end(), verts[0]) - face.begin());
  if (contact == 2 && face[static_cast<std::size_t>((opt.pivot + 1) % 3)] != verts[1]) {
    // orientation of the stored face runs the other way; contacts are an edge either way
    opt.pivot = static_cast<int>(std::find(face.begin(), face.end(), verts[1]) - face.begin());
  }
  return punch_hole(e, f, opt);
}

inline Embedding from_coords(PolySurface s, std::vector<RatVector> coords) {
  const int n = static_cast<int>(coords.front().size());
  return Embedding{std::move(s), std::move(coords), n};
}

inline RatVector centroid(const std::vector<RatVector>& pts) {
  RatVector c = zeros(pts.front().size());
  for (const auto& p : pts) c = c + p;
  return Rational(1, static_cast<unsigned long>(pts.size())) * c;
}

// Removes the faces containing `v` and the vertex itself, relabeling down.
inline PolySurface delete_star(const PolySurface& s, int v) {
  PolySurface out{s.num_vertices - 1, {}};
  for (const auto& f : s.faces) {
    if (std::find(f.begin(), f.end(), v) != f.end()) continue;
    Face g;
    for (int u : f) g.push_back(u > v ? u - 1 : u);
    out.faces.push_back(g);
  }
  return out;
}

inline std::vector<int> iota_labels(int n, int first) {
  std::vector<int> l(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = first + i;
  return l;
}

struct Base {
  Embedding e;
  int first_label = 0;  // labels are consecutive from here unless `labels` is set
  std::vector<int> labels;
  std::string recipe;
};

inline Base build_s2(int p) {
  if (p == 1) {
    PolySurface t{3, {{0, 1, 2}}};
    return {canonical(t), 0, {}, "triangle in R^2"};
  }
  PolySurface cyl{6, {{0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}}};
  std::vector<RatVector> c;
  for (auto [x, y, z] : std::vector<std::array<int, 3>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})
    c.push_back({Rational(x), Rational(y), Rational(z)});
  return {from_coords(cyl, c), 0, {}, "three-rectangle cylinder in R^3"};
}

inline Base build_p2(int p, bool punch_route) {
  const Embedding mob = canonical(surfaces::moebius_k5());
  if (p == 1) return {mob, 1, {}, "canonical Moebius band (K5) in R^4"};
  if (p == 2) {
    if (punch_route) return {punch_at(mob, {0, 1, 2}, 0), 1, {}, "Moebius band with a hole punched in face 123"};
    return {attach_handle(mob, 0, 2, 4, 1, true), 1, {}, "Moebius band plus a handle between [31] and [52]"};
  }
  Embedding e = canonical(surfaces::projective_k6());
  e = punch_at(e, {0, 1, 2}, 2);
  e = punch_at(e, {2, 3, 0}, 2);
  e = punch_at(e, {4, 5, 0}, 2);
  return {e, 1, {}, "canonical projective plane (K6) in R^5 with three edge-contact holes"};
}

inline Base build_t2(int p) {
  if (p <= 2) {
    Embedding e = canonical(detail::delete_star(surfaces::torus_k7(), 0));
    if (p == 1) return {e, 1, {}, "torus K7 minus the star of vertex 0, canonical in R^5"};
    return {punch_at(e, e.surface.faces.front(), 0), 1, {}, "T2_1 with a hole punched in its first face"};
  }
  Embedding e = canonical(surfaces::torus_k7());
  e = remove_face(e, find_face(e.surface, {0, 1, 5}));
  e = remove_face(e, find_face(e.surface, {3, 6, 4}));
  e = punch_at(e, {2, 3, 0}, 1);
  return {e, 0, {}, "canonical torus K7 in R^6, faces 015 and 346 removed, vertex-contact hole at 2"};
}

inline Base build_k2(int p) {
  const Embedding mob = canonical(surfaces::moebius_k5());
  if (p == 1) return {attach_handle(mob, 0, 2, 4, 1, false), 1, {}, "Moebius band plus a handle between [13] and [52]"};
  PolySurface s = surfaces::klein_k6_triangles();
  auto coords = simplex_vertices(5);
  coords.push_back(centroid({coords[2], coords[3], coords[5]}));
  s.num_vertices = 7;
  s.faces.push_back({2, 3, 6});
  s.faces.push_back({3, 5, 6});
  Embedding e = from_coords(s, coords);
  e = punch_at(e, {1, 0, 3}, 1);
  return {e, 1, {}, "Klein bottle K6 in R^5 minus its hexagon, vertex 7 in triangle 346, vertex-contact hole at 2"};
}

inline Base build_n3(int p) {
  if (p == 1) {
    const Embedding t = canonical(detail::delete_star(surfaces::torus_k7(), 0));
    return {attach_handle(t, 0, 2, 1, 5, false), 1, {}, "T2_1 plus a twisted handle between [13] and [26]"};
  }
  PolySurface s = surfaces::n3_k7_triangles();
  auto coords = simplex_vertices(6);
  coords.push_back(centroid({coords[1], coords[2], coords[6]}));
  s.num_vertices = 8;
  s.faces.push_back({6, 1, 7});
  s.faces.push_back({1, 2, 7});
  Embedding e = from_coords(s, coords);
  e = punch_at(e, {3, 5, 1}, 2);
  return {e, 1, {}, "three-crosscap K7 in R^6 minus its hexagon, vertex 8 in triangle 237, edge-contact hole in 246"};
}

inline Base build_g2(int p) {
  PolySurface k8 = surfaces::genus2_k8();
  if (p >= 2) {
    PolySurface s{8, {}};
    for (const auto& f : k8.faces)
      if (f.size() == 3) s.faces.push_back(f);
    return {canonical(s), 0, {}, "K8 genus-2 triangulation minus quadrilaterals 0246 and 1357, canonical in R^7"};
  }
  // drop vertex 0 with its seven faces; labels 1..7 span the simplex in R^6
  PolySurface s = detail::delete_star(k8, 0);
  std::erase_if(s.faces, [](const Face& f) { return f.size() != 3; });
  auto coords = simplex_vertices(6);
  // vertex 8 in triangle 246, vertex 9 on the segment [13]
  coords.push_back(centroid({coords[1], coords[3], coords[5]}));
  coords.push_back(centroid({coords[0], coords[2]}));
  s.num_vertices = 9;
  for (Face f : std::vector<Face>{{1, 3, 7}, {3, 5, 7}, {2, 4, 8}, {4, 6, 8}, {6, 0, 8}}) s.faces.push_back(f);
  return {from_coords(s, coords), 1, {}, "genus-2 K8 minus the star of 0 in R^6, vertex 8 in triangle 246, vertex 9 on [13]"};
}

}  // namespace detail

struct CatalogFamily {
  std::string prefix;
  ClosedSurfaceId closed;
};

inline const std::vector<CatalogFamily>& catalog_families() {
  static const std::vector<CatalogFamily> f{
      {"S2", ClosedSurfaceId::sphere()},          {"P2", ClosedSurfaceId::projective_plane()},
      {"T2", ClosedSurfaceId::torus()},           {"K2", ClosedSurfaceId::klein_bottle()},
      {"N3", ClosedSurfaceId{false, 3}},          {"G2", ClosedSurfaceId{true, 2}},
  };
  return f;
}

inline constexpr int kCatalogMaxHoles = 8;

/// Every accepted catalog name, family by family.
inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& fam : catalog_families()) {
    for (int p = 1; p <= kCatalogMaxHoles; ++p) {
      out.push_back(fam.prefix + "_" + std::to_string(p));
      if (fam.prefix == "P2" && p == 2) out.push_back("P2_2_punch");
    }
  }
  return out;
}

/// The names certified by the acceptance suite.
inline std::vector<std::string> core_catalog_names() {
  return {"S2_1", "S2_2", "S2_3", "S2_4", "P2_1", "P2_2", "P2_3", "T2_1",
          "T2_2", "T2_3", "K2_1", "K2_2", "N3_1", "N3_2", "G2_1", "G2_2"};
}

inline CatalogBuild build_catalog(const std::string& name) {
  const auto us = name.find('_');
  if (us == std::string::npos) throw PreconditionError("unknown catalog name '" + name + "'");
  const std::string prefix = name.substr(0, us);
  std::string rest = name.substr(us + 1);
  bool punch_route = false;
  if (prefix == "P2" && rest == "2_punch") {
    punch_route = true;
    rest = "2";
  }
  const auto fam = std::find_if(catalog_families().begin(), catalog_families().end(),
                                [&](const CatalogFamily& f) { return f.prefix == prefix; });
  if (fam == catalog_families().end() || rest.size() != 1 || rest[0] < '1' || rest[0] > '0' + kCatalogMaxHoles)
    throw PreconditionError("unknown catalog name '" + name + "'");
  const int p = rest[0] - '0';

  // the smallest p handled by a dedicated recipe; beyond it, punch holes
  const std::map<std::string, int> base_max{{"S2", 2}, {"P2", 3}, {"T2", 3}, {"K2", 2}, {"N3", 2}, {"G2", 2}};
  const int q = std::min(p, base_max.at(prefix));
  detail::Base b;
  if (prefix == "S2") b = detail::build_s2(q);
  else if (prefix == "P2") b = detail::build_p2(q, punch_route);
  else if (prefix == "T2") b = detail::build_t2(q);
  else if (prefix == "K2") b = detail::build_k2(q);
  else if (prefix == "N3") b = detail::build_n3(q);
  else b = detail::build_g2(q);
  for (int k = q; k < p; ++k) b.e = punch_hole(b.e, 0, PunchOptions{0, 0, true});
  if (p > q) b.recipe += ", then " + std::to_string(p - q) + " more hole(s) punched in face 0";

  CatalogEntry entry;
  entry.name = name;
  entry.closed = fam->closed;
  entry.p = p;
  entry.expected.orientable = fam->closed.orientable;
  entry.expected.genus = fam->closed.genus;
  entry.expected.boundary_components = p;
  entry.expected.euler = fam->closed.euler() - p;
  entry.expected.components = 1;
  const auto c0 = relative_chromatic(fam->closed, p);
  if (!c0.exact) throw Error("catalog: relative chromatic number of " + name + " is not known exactly");
  entry.c0 = *c0.exact;
  entry.dimension = entry.c0 - 1;
  entry.labels = b.labels.empty() ? detail::iota_labels(b.e.surface.num_vertices, b.first_label) : b.labels;
  entry.recipe = b.recipe;

  const auto got = validate_surface(b.e.surface);
  if (!(got == entry.expected))
    throw ConstructionError("catalog: " + name + " built as " + describe(got) + ", expected " + describe(entry.expected));
  if (b.e.dimension != entry.dimension) throw ConstructionError("catalog: " + name + " has the wrong ambient dimension");
  return {std::move(b.e), std::move(entry)};
}

}  // namespace tightsurf
