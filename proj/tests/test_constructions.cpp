#include <gtest/gtest.h>

#include "support.hpp"

using namespace tightsurf;
using namespace testing_support;

namespace {

Embedding moebius() { return canonical(surfaces::moebius_k5()); }

Embedding torus_minus_star() {
  PolySurface s = surfaces::torus_k7();
  PolySurface out{6, {}};
  for (const auto& f : s.faces) {
    if (std::find(f.begin(), f.end(), 0) != f.end()) continue;
    Face g;
    for (int v : f) g.push_back(v - 1);
    out.faces.push_back(g);
  }
  return canonical(out);
}

void expect_handle_invariants(const Trial& t) {
  EXPECT_EQ(count_euler(t.after.surface), count_euler(t.before.surface) - 1) << t.base;
  EXPECT_EQ(t.after.surface.num_vertices, t.before.surface.num_vertices + 2);
  EXPECT_EQ(t.after.surface.faces.size(), t.before.surface.faces.size() + 4);
  EXPECT_TRUE(oracle_tight(t.after)) << t.base;
  // every vertex stays on the boundary
  EXPECT_EQ(static_cast<int>(once_used_vertices(t.after.surface).size()), t.after.surface.num_vertices) << t.base;
  EXPECT_EQ(extreme_points(t.after.coords), extreme_points(t.before.coords));
}

}  // namespace

TEST(Simplex, StandardVertices) {
  const auto v = simplex_vertices(3);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], (RatVector{0, 0, 0}));
  EXPECT_EQ(v[2], (RatVector{0, 1, 0}));
  EXPECT_EQ(affine_rank(v), 3);
}

TEST(Canonical, MoebiusInR4) {
  const auto e = moebius();
  EXPECT_EQ(e.dimension, 4);
  const auto v = is_tight_surface(e);
  EXPECT_TRUE(v.tight);
  EXPECT_TRUE(v.substantial);
  EXPECT_TRUE(tpp_oracle(e).two_piece);
}

TEST(Canonical, TorusMinusAStarInR5) {
  const auto e = torus_minus_star();
  EXPECT_EQ(e.dimension, 5);
  const auto t = validate_surface(e.surface);
  EXPECT_TRUE(t.orientable);
  EXPECT_EQ(t.genus, 1);
  EXPECT_EQ(t.boundary_components, 1);
  EXPECT_TRUE(is_tight_surface(e).tight);
}

TEST(Canonical, ClosedTorusInR6) {
  const auto e = canonical(surfaces::torus_k7());
  EXPECT_EQ(e.dimension, 6);
  const auto v = is_tight_surface(e);
  EXPECT_TRUE(v.closed);
  EXPECT_TRUE(v.tight);
  EXPECT_TRUE(tpp_oracle(e).two_piece);
}

TEST(Canonical, Errors) {
  // square cut by one diagonal: K4 minus an edge
  EXPECT_THROW(canonical(PolySurface{4, {{0, 1, 2}, {0, 2, 3}}}), PreconditionError);
  EXPECT_THROW(canonical(PolySurface{4, {{0, 1, 2, 3}}}), PreconditionError);
  // cone over a triangle: complete graph with an interior apex
  EXPECT_THROW(canonical(PolySurface{4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}}), PreconditionError);
}

TEST(Canonical, Deterministic) {
  EXPECT_EQ(canonical(surfaces::moebius_k5()), canonical(surfaces::moebius_k5()));
  EXPECT_EQ(canonical(surfaces::projective_k6()), canonical(surfaces::projective_k6()));
}

TEST(Handle, MoebiusToKleinAndProjective) {
  const auto m = moebius();
  const auto k = attach_handle(m, 0, 2, 4, 1, false);
  const auto tk = validate_surface(k.surface);
  EXPECT_FALSE(tk.orientable);
  EXPECT_EQ(tk.genus, 2);
  EXPECT_EQ(tk.boundary_components, 1);
  EXPECT_TRUE(is_tight_surface(k).tight);

  const auto p = attach_handle(m, 0, 2, 4, 1, true);
  const auto tp = validate_surface(p.surface);
  EXPECT_FALSE(tp.orientable);
  EXPECT_EQ(tp.genus, 1);
  EXPECT_EQ(tp.boundary_components, 2);
  EXPECT_TRUE(is_tight_surface(p).tight);
}

TEST(Handle, TorusToThreeCrosscaps) {
  const auto n = attach_handle(torus_minus_star(), 0, 2, 1, 5, false);
  const auto t = validate_surface(n.surface);
  EXPECT_FALSE(t.orientable);
  EXPECT_EQ(t.genus, 3);
  EXPECT_EQ(t.boundary_components, 1);
  EXPECT_EQ(n.dimension, 5);
  EXPECT_TRUE(oracle_tight(n));
}

TEST(Handle, NewVerticesUseTheStatedWeights) {
  const auto m = moebius();
  const auto k = attach_handle(m, 0, 2, 4, 1);
  const std::array<Rational, 4> we{2, 1, 2, 1}, wf{1, 2, 1, 2};
  const std::vector<RatVector> abcd{m.point(0), m.point(2), m.point(4), m.point(1)};
  EXPECT_EQ(k.point(5), barycentric_point(we, abcd));
  EXPECT_EQ(k.point(6), barycentric_point(wf, abcd));
  const auto g = skeleton_graph(k.surface);
  for (int v : {0, 4, 6}) EXPECT_TRUE(g.has_edge(5, v));
  for (int v : {2, 1, 5}) EXPECT_TRUE(g.has_edge(6, v));
}

TEST(Handle, Errors) {
  const auto m = moebius();
  EXPECT_THROW(attach_handle(m, 0, 2, 0, 1), PreconditionError);  // not distinct
  const auto cyc = boundary_cycles(m.surface).front();
  std::set<Edge> bnd;
  for (std::size_t i = 0; i < cyc.size(); ++i) bnd.insert(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  int a = -1, b = -1;
  for (int u = 0; u < 5 && a < 0; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!bnd.count({u, v})) {
        a = u;
        b = v;
        break;
      }
  ASSERT_GE(a, 0);
  std::vector<int> rest;
  for (int v = 0; v < 5; ++v)
    if (v != a && v != b) rest.push_back(v);
  EXPECT_THROW(attach_handle(m, a, b, rest[0], rest[1]), PreconditionError);

  // degenerate tetrahedron: flatten everything into R^3 and back
  auto flat = m;
  for (auto& x : flat.coords) x[3] = 0;
  EXPECT_THROW(attach_handle(flat, 0, 2, 4, 1), Error);
}

TEST(Handle, TetrahedronMeetingTheSurfaceIsRejected) {
  // cylinder: both boundary triangles, but the prism's quads cross the tetrahedron
  const auto cyl = build_catalog("S2_2").embedding;
  int rejected = 0;
  const auto cycles = boundary_cycles(cyl.surface);
  ASSERT_EQ(cycles.size(), 2u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const int a = cycles[0][i], b = cycles[0][(i + 1) % 3], c = cycles[1][j], d = cycles[1][(j + 1) % 3];
      const bool meets = tetrahedron_meets_surface(cyl, {a, b, c, d});
      if (meets) {
        ++rejected;
        EXPECT_THROW(attach_handle(cyl, a, b, c, d), PreconditionError);
      }
    }
  EXPECT_GT(rejected, 0);
}

TEST(Handle, RandomApplicationsKeepTheirPromises) {
  std::mt19937_64 rng(0x4a4e);
  int applied = 0, attempts = 0;
  while (applied < 50 && attempts < 400) {
    ++attempts;
    const auto t = random_handle_trial(rng);
    if (!t.applied) continue;
    ++applied;
    expect_handle_invariants(t);
  }
  EXPECT_GE(applied, 50);
}

TEST(Punch, CylinderToThreeHoles) {
  // the cylinder is three quadrilaterals: split one, then punch
  const auto cyl = build_catalog("S2_2").embedding;
  ASSERT_EQ(cyl.surface.faces.size(), 3u);
  EXPECT_THROW(punch_hole(cyl, 0), PreconditionError);
  PunchOptions split;
  split.allow_split = true;
  const auto s3 = punch_hole(cyl, 0, split);
  const auto t = validate_surface(s3.surface);
  EXPECT_EQ(t.genus, 0);
  EXPECT_EQ(t.boundary_components, 3);
  EXPECT_TRUE(oracle_tight(s3));
}

TEST(Punch, InnerTriangleShrinksTowardTheCentroid) {
  const auto tri = build_catalog("S2_1").embedding;
  const auto out = punch_hole(tri, 0);
  ASSERT_EQ(out.surface.num_vertices, 6);
  RatVector centroid = zeros(2);
  for (int v = 0; v < 3; ++v) centroid = centroid + Rational(1, 3) * tri.point(v);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(out.point(3 + v), centroid + Rational(1, 3) * (tri.point(v) - centroid));
  EXPECT_EQ(out.surface.faces.size(), 6u);
}

TEST(Punch, ContactVariantsOnTheClosedProjectivePlane) {
  const auto k6 = canonical(surfaces::projective_k6());
  for (int contact = 0; contact <= 2; ++contact) {
    PunchOptions opt;
    opt.boundary_contact = contact;
    const auto out = punch_hole(k6, 0, opt);
    const auto t = validate_surface(out.surface);
    EXPECT_EQ(t.boundary_components, 1);
    EXPECT_EQ(t.euler, 0);
    EXPECT_EQ(out.surface.num_vertices, 6 + 3 - contact);
    EXPECT_TRUE(is_zero_tight_surface(out).zero_tight);
    EXPECT_TRUE(tpp_oracle(out).two_piece);
    const auto bnd = once_used_vertices(out.surface);
    const Face& f = k6.surface.faces[0];
    for (int i = 0; i < contact; ++i) EXPECT_TRUE(bnd.count(f[static_cast<std::size_t>(i)]));
  }
}

TEST(Punch, Errors) {
  const auto m = moebius();
  PunchOptions bad;
  bad.boundary_contact = 3;
  EXPECT_THROW(punch_hole(m, 0, bad), PreconditionError);
  EXPECT_THROW(punch_hole(m, 99), PreconditionError);
  PunchOptions touch;
  touch.boundary_contact = 1;  // every Moebius vertex is already on the boundary
  EXPECT_THROW(punch_hole(m, 0, touch), PreconditionError);
}

TEST(Punch, RandomApplicationsKeepTheirPromises) {
  std::mt19937_64 rng(0x7075);
  int applied = 0, attempts = 0, contact = 0;
  while (applied < 50 && attempts < 600) {
    ++attempts;
    const auto t = random_punch_trial(rng);
    if (!t.applied) continue;
    ++applied;
    EXPECT_EQ(count_euler(t.after.surface), count_euler(t.before.surface) - 1) << t.base;
    EXPECT_EQ(count_boundary_pieces(t.after.surface), count_boundary_pieces(t.before.surface) + 1) << t.base;
    EXPECT_EQ(extreme_points(t.after.coords), extreme_points(t.before.coords)) << t.base;
    EXPECT_TRUE(tpp_oracle(t.after).two_piece) << t.base;
    if (!once_used_vertices(t.before.surface).empty()) {
      EXPECT_TRUE(oracle_tight(t.after)) << t.base;
    }
    if (t.after.surface.num_vertices - t.before.surface.num_vertices < 3) ++contact;
  }
  EXPECT_GE(applied, 50);
  EXPECT_GT(contact, 0);
}

TEST(RemoveFace, OpensANewBoundary) {
  const auto t = canonical(surfaces::torus_k7());
  const auto out = remove_face(t, 0);
  const auto ty = validate_surface(out.surface);
  EXPECT_EQ(ty.boundary_components, 1);
  EXPECT_EQ(ty.euler, -1);
  EXPECT_THROW(remove_face(out, 0), PreconditionError);  // shares a vertex with the new hole
}

TEST(SplitFace, KeepsTheSurface) {
  const auto cyl = build_catalog("S2_2").embedding;
  const auto out = split_face(cyl, 1);
  EXPECT_EQ(out.surface.faces.size(), 4u);
  EXPECT_EQ(validate_surface(out.surface), validate_surface(cyl.surface));
  EXPECT_EQ(out.surface.faces[1].size(), 3u);
  EXPECT_THROW(split_face(out, 1), PreconditionError);
  EXPECT_THROW(split_face(cyl, 3), PreconditionError);
}

TEST(Affine, Errors) {
  const auto m = moebius();
  RatMatrix sing(4, RatVector(4, Rational(0)));
  EXPECT_THROW(apply_affine(m, sing, zeros(4)), PreconditionError);
  RatMatrix id(4, RatVector(4, Rational(0)));
  for (int i = 0; i < 4; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  EXPECT_THROW(apply_affine(m, id, zeros(3)), PreconditionError);
  EXPECT_EQ(apply_affine(m, id, zeros(4)), m);
}

TEST(CheckPreserved, DetectsRegressions) {
  EmbeddingProfile before;
  before.type.euler = 0;
  before.type.boundary_components = 1;
  before.embedded = before.zero_tight = before.tight = before.substantial = before.vertices_on_boundary = true;
  before.extreme = {0, 1, 2};
  EmbeddingProfile after = before;
  after.type.euler = -1;
  EXPECT_NO_THROW(detail::check_preserved(before, after, "op"));

  auto broken = after;
  broken.type.euler = 0;
  EXPECT_THROW(detail::check_preserved(before, broken, "op"), ConstructionError);
  broken = after;
  broken.tight = false;
  EXPECT_THROW(detail::check_preserved(before, broken, "op"), ConstructionError);
  broken = after;
  broken.vertices_on_boundary = false;
  EXPECT_THROW(detail::check_preserved(before, broken, "op"), ConstructionError);
  broken = after;
  broken.extreme = {0, 1, 2, 5};
  EXPECT_THROW(detail::check_preserved(before, broken, "op"), ConstructionError);

  // a closed input only promises 0-tightness
  auto closed = before;
  closed.type.boundary_components = 0;
  auto loose = after;
  loose.tight = false;
  EXPECT_NO_THROW(detail::check_preserved(closed, loose, "op"));
  loose.zero_tight = false;
  EXPECT_THROW(detail::check_preserved(closed, loose, "op"), ConstructionError);
}
