#pragma once

// Convex-hull queries over small rational point sets, all reduced to exact
// LP feasibility. No facet enumeration.

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "tightsurf/exact.hpp"

namespace tightsurf {

/// Extreme points and hull edges of a finite point set, by input index.
struct HullSkeleton {
  std::vector<int> extreme_vertices;           // sorted
  std::set<std::pair<int, int>> edges;         // (i, j) with i < j
};

namespace detail {

inline void check_uniform(std::span<const RatVector> points, std::size_t n) {
  for (const auto& p : points)
    if (p.size() != n) throw PreconditionError("point dimension mismatch");
}

}  // namespace detail

/// Convex weights expressing p over `points`, if p lies in their hull.
inline std::optional<RatVector> hull_weights(const RatVector& p, std::span<const RatVector> points) {
  detail::check_uniform(points, p.size());
  if (points.empty()) return std::nullopt;
  const std::size_t k = points.size();
  LinearSystem sys(k);
  sys.set_all_nonnegative();
  sys.add_eq(RatVector(k, Rational(1)), 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    RatVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = points[j][i];
    sys.add_eq(std::move(row), p[i]);
  }
  auto res = lp_feasible(sys);
  if (!res.feasible) return std::nullopt;
  return std::move(res.witness);
}

inline bool is_in_hull(const RatVector& p, std::span<const RatVector> points) {
  return hull_weights(p, points).has_value();
}

inline std::vector<RatVector> select_points(std::span<const RatVector> points, std::span<const int> indices) {
  std::vector<RatVector> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(points[static_cast<std::size_t>(i)]);
  return out;
}

/// True iff points[i] is not a convex combination of the other points.
/// A duplicated point is never extreme.
inline bool is_extreme(int i, std::span<const RatVector> points) {
  std::vector<RatVector> others;
  others.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k)
    if (static_cast<int>(k) != i) others.push_back(points[k]);
  if (others.empty()) return true;
  return !is_in_hull(points[static_cast<std::size_t>(i)], others);
}

inline std::vector<int> extreme_points(std::span<const RatVector> points) {
  if (points.empty()) return {};
  detail::check_uniform(points, points.front().size());
  std::vector<int> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (is_extreme(static_cast<int>(i), points)) out.push_back(static_cast<int>(i));
  return out;
}

/// True iff q lies on the closed segment [a, b] (a != b).
inline bool on_segment(const RatVector& q, const RatVector& a, const RatVector& b) {
  const RatVector d = b - a;
  const RatVector w = q - a;
  // q = a + s d with 0 <= s <= 1
  std::optional<Rational> s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) == 0) {
      if (sgn(w[i]) != 0) return false;
      continue;
    }
    Rational si = w[i] / d[i];
    if (s && *s != si) return false;
    s = std::move(si);
  }
  return s && sgn(*s) >= 0 && *s <= 1;
}

namespace detail {

// Edge test without re-checking extremality.
inline bool supports_edge(std::size_t i, std::size_t j, std::span<const RatVector> points) {
  const RatVector& pi = points[i];
  const RatVector& pj = points[j];
  const std::size_t n = pi.size();
  // find w with w.(pj - pi) = 0 and w.(pk - pi) <= -1 for pk off the segment;
  // scaling makes the margin 1 without loss of generality
  LinearSystem sys(n);
  sys.add_eq(pj - pi, 0);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k == i || k == j || on_segment(points[k], pi, pj)) continue;
    sys.add_le(points[k] - pi, -1);
  }
  return lp_feasible(sys).feasible;
}

}  // namespace detail

/// True iff the segment [points[i], points[j]] is an edge (1-face) of the hull.
/// Input points lying inside the segment do not disqualify it.
inline bool is_hull_edge(int i, int j, std::span<const RatVector> points) {
  const auto n = static_cast<int>(points.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw PreconditionError("is_hull_edge: bad index pair");
  detail::check_uniform(points, points.front().size());
  if (!is_extreme(i, points) || !is_extreme(j, points))
    throw PreconditionError("is_hull_edge: index is not an extreme point");
  return detail::supports_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), points);
}

inline HullSkeleton hull_skeleton(std::span<const RatVector> points) {
  if (points.empty()) throw PreconditionError("hull_skeleton: no points");
  HullSkeleton h;
  h.extreme_vertices = extreme_points(points);
  const auto& ev = h.extreme_vertices;
  for (std::size_t a = 0; a < ev.size(); ++a)
    for (std::size_t b = a + 1; b < ev.size(); ++b)
      if (detail::supports_edge(static_cast<std::size_t>(ev[a]), static_cast<std::size_t>(ev[b]), points))
        h.edges.emplace(ev[a], ev[b]);
  return h;
}

}  // namespace tightsurf
