#pragma once

// Small simple graphs: exact chromatic number and complete-graph
// subdivision (topological minor) search. Desk scale only.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tightsurf/error.hpp"

namespace tightsurf {

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw PreconditionError("negative vertex count");
  }
  Graph(int n, const std::set<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  static Graph cycle(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!edges_.emplace(u, v).second) return;
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }

  int num_vertices() const { return n_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) != 0;
  }

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct Coloring {
  int colors = 0;
  std::vector<int> color_of;  // one entry per vertex, values in [0, colors)
};

inline constexpr int kChromaticVertexCap = 16;

namespace detail {

inline bool color_search(const Graph& g, int k, std::vector<int>& color, int colored) {
  const int n = g.num_vertices();
  if (colored == n) return true;
  // DSATUR choice: most distinct neighbor colors, then highest degree
  int pick = -1, best_sat = -1, best_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] >= 0) continue;
    std::uint32_t seen = 0;
    for (int u : g.neighbors(v))
      if (color[static_cast<std::size_t>(u)] >= 0) seen |= 1u << color[static_cast<std::size_t>(u)];
    const int sat = __builtin_popcount(seen);
    if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
      pick = v;
      best_sat = sat;
      best_deg = g.degree(v);
    }
  }
  std::uint32_t used = 0;
  int max_used = -1;
  for (int v = 0; v < n; ++v) max_used = std::max(max_used, color[static_cast<std::size_t>(v)]);
  for (int u : g.neighbors(pick))
    if (color[static_cast<std::size_t>(u)] >= 0) used |= 1u << color[static_cast<std::size_t>(u)];
  // symmetry breaking: at most one fresh color
  for (int c = 0; c < k && c <= max_used + 1; ++c) {
    if (used & (1u << c)) continue;
    color[static_cast<std::size_t>(pick)] = c;
    if (color_search(g, k, color, colored + 1)) return true;
  }
  color[static_cast<std::size_t>(pick)] = -1;
  return false;
}

inline int greedy_clique(const Graph& g) {
  int best = g.num_vertices() > 0 ? 1 : 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<int> clique{s};
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (v == s) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](int c) { return g.has_edge(c, v); })) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace detail

/// Exact chromatic number with an optimal coloring. Throws ScaleError above
/// `cap` vertices; use clique/degree bounds for larger graphs.
inline Coloring chromatic_coloring(const Graph& g, int cap = kChromaticVertexCap) {
  const int n = g.num_vertices();
  if (n > cap || n > 31)
    throw ScaleError("chromatic_number: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap) +
                     "; use the clique lower bound / greedy upper bound instead");
  if (n == 0) return {};
  const int lower = detail::greedy_clique(g);
  for (int k = lower; k <= n; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    if (detail::color_search(g, k, color, 0)) return {k, std::move(color)};
  }
  throw Error("chromatic_coloring: unreachable");
}

inline int chromatic_number(const Graph& g, int cap = kChromaticVertexCap) { return chromatic_coloring(g, cap).colors; }

/// Branch vertices of a K_k subdivision and the internally disjoint path
/// joining each pair (paths[p] runs between branch[a] and branch[b] for the
/// p-th pair (a, b) in lexicographic order).
struct SubdivisionWitness {
  std::vector<int> branch;
  std::vector<std::vector<int>> paths;
};

namespace detail {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, int k) : g_(g), k_(k), used_(static_cast<std::size_t>(g.num_vertices()), false) {}

  std::optional<SubdivisionWitness> run() {
    const int n = g_.num_vertices();
    if (k_ <= 0) return SubdivisionWitness{};
    if (k_ > n) return std::nullopt;
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
      if (g_.degree(v) >= k_ - 1) candidates.push_back(v);
    std::vector<int> branch;
    if (choose(candidates, 0, branch)) return witness_;
    return std::nullopt;
  }

 private:
  bool choose(const std::vector<int>& cand, std::size_t from, std::vector<int>& branch) {
    if (static_cast<int>(branch.size()) == k_) return route(branch);
    for (std::size_t i = from; i < cand.size(); ++i) {
      if (cand.size() - i < static_cast<std::size_t>(k_) - branch.size()) break;
      branch.push_back(cand[i]);
      if (choose(cand, i + 1, branch)) return true;
      branch.pop_back();
    }
    return false;
  }

  bool route(const std::vector<int>& branch) {
    pairs_.clear();
    for (std::size_t a = 0; a < branch.size(); ++a)
      for (std::size_t b = a + 1; b < branch.size(); ++b) pairs_.emplace_back(branch[a], branch[b]);
    std::fill(used_.begin(), used_.end(), false);
    for (int b : branch) used_[static_cast<std::size_t>(b)] = true;
    paths_.assign(pairs_.size(), {});
    used_edges_.clear();
    if (!route_pair(0)) return false;
    witness_ = {branch, paths_};
    return true;
  }

  bool route_pair(std::size_t p) {
    if (p == pairs_.size()) return true;
    const auto [s, t] = pairs_[p];
    std::vector<int> path{s};
    return extend(p, t, path);
  }

  // DFS over simple paths from path.front() to t through unused vertices.
  bool extend(std::size_t p, int t, std::vector<int>& path) {
    const int cur = path.back();
    for (int nb : g_.neighbors(cur)) {
      if (nb == t) {
        const auto e = std::minmax(cur, nb);
        if (path.size() == 1 && used_edges_.count(e)) continue;
        path.push_back(t);
        paths_[p] = path;
        used_edges_.insert(e);
        if (route_pair(p + 1)) return true;
        used_edges_.erase(e);
        path.pop_back();
        continue;
      }
      if (used_[static_cast<std::size_t>(nb)]) continue;
      used_[static_cast<std::size_t>(nb)] = true;
      path.push_back(nb);
      if (extend(p, t, path)) return true;
      path.pop_back();
      used_[static_cast<std::size_t>(nb)] = false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<bool> used_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> paths_;
  std::set<std::pair<int, int>> used_edges_;
  SubdivisionWitness witness_;
};

}  // namespace detail

/// Searches for a subdivision of K_k; the witness lists branch vertices and paths.
inline std::optional<SubdivisionWitness> find_complete_subdivision(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("subdivision order must be >= 1");
  return detail::SubdivisionSearch(g, k).run();
}

inline bool has_complete_subdivision(const Graph& g, int k) { return find_complete_subdivision(g, k).has_value(); }

inline int largest_complete_subdivision(const Graph& g) {
  int k = 0;
  while (k < g.num_vertices() && has_complete_subdivision(g, k + 1)) ++k;
  return k;
}

}  // namespace tightsurf
