#include <gtest/gtest.h>

#include "support.hpp"

using namespace tightsurf;
using testing_support::pt;

namespace {

std::vector<RatVector> unit_square() { return {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})}; }

std::vector<RatVector> cube() {
  std::vector<RatVector> c;
  for (int m = 0; m < 8; ++m) c.push_back(pt({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  return c;
}

Rational det3(const RatVector& a, const RatVector& b, const RatVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Signed volume orientation of d relative to the plane through a, b, c.
int orient(const RatVector& a, const RatVector& b, const RatVector& c, const RatVector& d) {
  return sgn(det3(b - a, c - a, d - a));
}

}  // namespace

TEST(Hull, Membership) {
  const std::vector<RatVector> tri{pt({0, 0}), pt({3, 0}), pt({0, 3})};
  EXPECT_TRUE(is_in_hull(pt({1, 1}), tri));
  EXPECT_TRUE(is_in_hull(pt({3, 0}), tri));
  EXPECT_FALSE(is_in_hull(pt({2, 0}) + pt({0, 2}) + pt({0, 1}), tri));
  EXPECT_FALSE(is_in_hull(pt({2, 0}), unit_square()));
  EXPECT_THROW(is_in_hull(pt({0, 0, 0}), tri), PreconditionError);
}

TEST(Hull, HandleVertexLiesInHullOfItsNeighbors) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  int checked = 0;
  while (checked < 25) {
    std::vector<RatVector> t;
    for (int k = 0; k < 4; ++k) t.push_back(pt({c(rng), c(rng), c(rng)}));
    if (affine_rank(t) != 3) continue;
    const std::array<Rational, 4> we{2, 1, 2, 1}, wf{1, 2, 1, 2};
    const RatVector e = barycentric_point(we, t), f = barycentric_point(wf, t);
    EXPECT_TRUE(is_in_hull(e, std::vector<RatVector>{t[0], t[2], f}));
    EXPECT_TRUE(is_in_hull(f, std::vector<RatVector>{t[1], t[3], e}));
    ++checked;
  }
}

TEST(Hull, ExtremePoints) {
  auto sq = unit_square();
  sq.push_back(make_rational(1, 2) * pt({1, 1}));
  EXPECT_EQ(extreme_points(sq), (std::vector<int>{0, 1, 2, 3}));
  std::vector<RatVector> simplex{pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}), pt({0, 0, 0, 1})};
  EXPECT_EQ(extreme_points(simplex), (std::vector<int>{0, 1, 2, 3, 4}));
  // duplicates are never extreme
  std::vector<RatVector> dup{pt({0}), pt({1}), pt({1})};
  EXPECT_EQ(extreme_points(dup), (std::vector<int>{0}));
}

TEST(Hull, HandleVerticesAreNotExtreme) {
  const auto b = build_catalog("K2_1");
  const auto ext = extreme_points(b.embedding.coords);
  EXPECT_EQ(ext, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Hull, EdgesOfSquareAndSimplex) {
  const auto sq = unit_square();
  EXPECT_TRUE(is_hull_edge(0, 1, sq));
  EXPECT_TRUE(is_hull_edge(3, 0, sq));
  EXPECT_FALSE(is_hull_edge(0, 2, sq));
  EXPECT_FALSE(is_hull_edge(1, 3, sq));
  std::vector<RatVector> simplex{pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}), pt({0, 0, 0, 1})};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) {
        EXPECT_TRUE(is_hull_edge(i, j, simplex));
      }
  const auto h = hull_skeleton(simplex);
  EXPECT_EQ(h.edges.size(), 10u);
}

TEST(Hull, EdgeQueryOnNonExtremePointThrows) {
  const auto b = build_catalog("G2_1");
  // labels 8 and 9 are the two added vertices
  EXPECT_THROW(is_hull_edge(7, 8, b.embedding.coords), PreconditionError);
  EXPECT_THROW(is_hull_edge(0, 0, b.embedding.coords), PreconditionError);
}

TEST(Hull, CollinearPointInsideAnEdge) {
  auto sq = unit_square();
  sq.push_back(make_rational(1, 2) * pt({1, 0}));  // midpoint of [0,1]
  const auto h = hull_skeleton(sq);
  EXPECT_EQ(h.extreme_vertices, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(h.edges.count({0, 1}));
  EXPECT_EQ(h.edges.size(), 4u);
}

TEST(Hull, CubeSkeleton) {
  const auto c = cube();
  const auto h = hull_skeleton(c);
  EXPECT_EQ(h.extreme_vertices.size(), 8u);
  EXPECT_EQ(h.edges.size(), 12u);
  // independent oracle: cube edges join corners differing in one coordinate
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) EXPECT_EQ(h.edges.count({i, j}) == 1, __builtin_popcount(i ^ j) == 1);
}

TEST(Hull, RandomPolytopesMatchFacetOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> c(-20, 20);
  int done = 0;
  while (done < 15) {
    std::vector<RatVector> p;
    for (int k = 0; k < 9; ++k) p.push_back(pt({c(rng), c(rng), c(rng)}));
    bool general = true;
    for (std::size_t a = 0; a < p.size() && general; ++a)
      for (std::size_t b = a + 1; b < p.size() && general; ++b)
        for (std::size_t d = b + 1; d < p.size() && general; ++d)
          for (std::size_t e = d + 1; e < p.size() && general; ++e)
            if (orient(p[a], p[b], p[d], p[e]) == 0) general = false;
    if (!general) continue;
    ++done;
    // in general position, [ij] is a hull edge iff some triangle ijk is a facet
    auto facet = [&](std::size_t i, std::size_t j, std::size_t k) {
      int side = 0;
      for (std::size_t m = 0; m < p.size(); ++m) {
        if (m == i || m == j || m == k) continue;
        const int o = orient(p[i], p[j], p[k], p[m]);
        if (side == 0) side = o;
        if (o != side) return false;
      }
      return true;
    };
    const auto h = hull_skeleton(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool extreme = false;
      for (std::size_t j = 0; j < p.size() && !extreme; ++j)
        for (std::size_t k = j + 1; k < p.size() && !extreme; ++k)
          if (j != i && k != i && facet(i, j, k)) extreme = true;
      EXPECT_EQ(std::binary_search(h.extreme_vertices.begin(), h.extreme_vertices.end(), static_cast<int>(i)), extreme);
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        bool edge = false;
        for (std::size_t k = 0; k < p.size() && !edge; ++k)
          if (k != i && k != j && facet(i, j, k)) edge = true;
        EXPECT_EQ(h.edges.count({static_cast<int>(i), static_cast<int>(j)}) == 1, edge) << i << "," << j;
      }
    }
  }
}

TEST(Hull, CaratheodoryConsistencyAndSymmetry) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RatVector> p;
    for (int k = 0; k < 8; ++k) p.push_back(pt({c(rng), c(rng), c(rng), c(rng)}));
    const auto ext = extreme_points(p);
    const auto ep = select_points(p, ext);
    for (const auto& q : p) EXPECT_TRUE(is_in_hull(q, ep));
    for (int i : ext)
      for (int j : ext)
        if (i != j) {
          EXPECT_EQ(is_hull_edge(i, j, p), is_hull_edge(j, i, p));
        }
  }
}

TEST(Hull, AffineInvariance) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<RatVector> p;
    for (int k = 0; k < 8; ++k) {
      RatVector v(n);
      for (auto& x : v) x = c(rng);
      p.push_back(v);
    }
    const auto h = hull_skeleton(p);
    const auto g = hull_skeleton(testing_support::map_points(testing_support::random_affine(n, rng), p));
    EXPECT_EQ(h.extreme_vertices, g.extreme_vertices);
    EXPECT_EQ(h.edges, g.edges);
  }
}
