#pragma once

// Exact rational arithmetic, small dense linear algebra and an exact
// simplex-based feasibility solver. Nothing here touches floating point.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightsurf/error.hpp"

namespace tightsurf {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// A point (or direction) of R^n with rational coordinates.
using RatVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

/// Parses "p/q" or an integer. Leading '+' is rejected; the result is canonicalized.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text, true)) return std::nullopt;
    return Rational(mpz_class(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
  mpz_class d(std::string{den});
  if (d == 0) return std::nullopt;
  Rational q(mpz_class(std::string{num}), d);
  q.canonicalize();
  return q;
}

inline RatVector zeros(std::size_t n) { return RatVector(n, Rational(0)); }

inline RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v = zeros(n);
  v[i] = 1;
  return v;
}

inline RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

/// Affine combination sum(w_i * p_i); weights need not sum to one.
inline RatVector combine(std::span<const Rational> weights, std::span<const RatVector> points) {
  if (weights.size() != points.size() || points.empty())
    throw PreconditionError("combine: weight/point count mismatch");
  RatVector r = zeros(points.front().size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].size() != r.size()) throw PreconditionError("vector dimension mismatch");
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += weights[k] * points[k][i];
  }
  return r;
}

/// Point with the given barycentric weights (normalized by their sum).
inline RatVector barycentric_point(std::span<const Rational> weights, std::span<const RatVector> points) {
  Rational total = 0;
  for (const auto& w : weights) total += w;
  if (sgn(total) == 0) throw PreconditionError("barycentric weights sum to zero");
  RatVector r = combine(weights, points);
  for (auto& c : r) c /= total;
  return r;
}

using RatMatrix = std::vector<RatVector>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && sgn(m[pick][col]) == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t matrix_rank(RatMatrix m) { return row_reduce(m).size(); }

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
inline std::vector<RatVector> nullspace(RatMatrix m, std::size_t cols) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v = zeros(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && sgn(m[pick][col]) == 0) ++pick;
    if (pick == n) return 0;
    if (pick != col) {
      std::swap(m[pick], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Dimension of the affine hull of the points (0 for a single point).
inline int affine_rank(std::span<const RatVector> points) {
  if (points.empty()) throw PreconditionError("no points");
  const std::size_t n = points.front().size();
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n) throw PreconditionError("affine_rank: mixed dimensions");
    if (i > 0) diffs.push_back(points[i] - points[0]);
  }
  if (diffs.empty() || n == 0) return 0;
  return static_cast<int>(matrix_rank(std::move(diffs)));
}

// ---------------------------------------------------------------------------
// Linear feasibility

enum class Relation { LessEqual, Less, Equal };

struct Constraint {
  RatVector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Conjunction of linear constraints over `num_vars` variables. Variables are
/// free unless flagged in `nonnegative` (empty means all free).
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  std::vector<bool> nonnegative;

  explicit LinearSystem(std::size_t vars = 0) : num_vars(vars) {}

  void add(RatVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
  void add_le(RatVector c, Rational rhs) { add(std::move(c), Relation::LessEqual, std::move(rhs)); }
  void add_lt(RatVector c, Rational rhs) { add(std::move(c), Relation::Less, std::move(rhs)); }
  void add_eq(RatVector c, Rational rhs) { add(std::move(c), Relation::Equal, std::move(rhs)); }
  void add_ge(RatVector c, Rational rhs) {
    for (auto& x : c) x = -x;
    add(std::move(c), Relation::LessEqual, -rhs);
  }
  void add_gt(RatVector c, Rational rhs) {
    for (auto& x : c) x = -x;
    add(std::move(c), Relation::Less, -rhs);
  }
  void set_nonnegative(std::size_t var) {
    if (nonnegative.empty()) nonnegative.assign(num_vars, false);
    nonnegative.at(var) = true;
  }
  void set_all_nonnegative() { nonnegative.assign(num_vars, true); }

  bool is_nonnegative(std::size_t var) const { return !nonnegative.empty() && nonnegative[var]; }

  /// True iff `x` satisfies every constraint and sign restriction exactly.
  bool satisfied_by(const RatVector& x) const {
    if (x.size() != num_vars) return false;
    for (std::size_t j = 0; j < num_vars; ++j)
      if (is_nonnegative(j) && sgn(x[j]) < 0) return false;
    for (const auto& c : constraints) {
      const Rational lhs = dot(c.coeffs, x);
      switch (c.relation) {
        case Relation::LessEqual:
          if (lhs > c.rhs) return false;
          break;
        case Relation::Less:
          if (lhs >= c.rhs) return false;
          break;
        case Relation::Equal:
          if (lhs != c.rhs) return false;
          break;
      }
    }
    return true;
  }
};

struct LpResult {
  bool feasible = false;
  RatVector witness;  // empty when infeasible
};

namespace detail {

// Dense simplex tableau over y >= 0 with rows  A y = b  (b >= 0 maintained),
// maximizing c.y. Bland's rule (smallest index) throughout, so the pivot
// sequence is deterministic and cannot cycle.
class Tableau {
 public:
  Tableau(RatMatrix rows, RatVector rhs, std::vector<std::size_t> basis)
      : a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t cols() const { return a_.empty() ? 0 : a_.front().size(); }
  std::size_t rows() const { return a_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const RatVector& rhs() const { return b_; }

  /// Maximizes objective over columns with allowed[j]; returns false if unbounded.
  bool maximize(const RatVector& objective, const std::vector<bool>& allowed) {
    const std::size_t n = cols();
    RatVector reduced(n);
    for (;;) {
      // reduced_j = c_B B^-1 A_j - c_j
      std::size_t enter = n;
      for (std::size_t j = 0; j < n && enter == n; ++j) {
        if (!allowed[j]) continue;
        Rational r = -objective[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (sgn(a_[i][j]) != 0) r += objective[basis_[i]] * a_[i][j];
        if (sgn(r) < 0) enter = j;
      }
      if (enter == n) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / a_[row][col];
    for (auto& x : a_[row]) x *= inv;
    b_[row] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == row || sgn(a_[i][col]) == 0) continue;
      const Rational f = a_[i][col];
      for (std::size_t j = 0; j < cols(); ++j)
        if (sgn(a_[row][j]) != 0) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  /// Pivots basic columns >= first_artificial out of the basis, dropping
  /// rows that turn out to be redundant.
  void expel(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (sgn(a_[i][j]) != 0) {
          col = j;
          break;
        }
      if (col < first_artificial) {
        pivot(i, col);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  RatVector solution() const {
    RatVector y = zeros(cols());
    for (std::size_t i = 0; i < rows(); ++i) y[basis_[i]] = b_[i];
    return y;
  }

 private:
  RatMatrix a_;
  RatVector b_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Decides whether the system has a rational solution; strict inequalities are
/// honored exactly. Free variables are split x = x+ - x-; strict rows get a
/// shared margin t (a.x + t <= b, t <= 1) which phase two maximizes.
inline LpResult lp_feasible(const LinearSystem& sys) {
  const std::size_t nv = sys.num_vars;
  if (!sys.nonnegative.empty() && sys.nonnegative.size() != nv)
    throw PreconditionError("lp_feasible: sign flags do not match variable count");
  bool has_strict = false;
  for (const auto& c : sys.constraints) {
    if (c.coeffs.size() != nv) throw PreconditionError("lp_feasible: constraint width mismatch");
    has_strict = has_strict || c.relation == Relation::Less;
  }

  // Column layout: [x columns][t][slacks][artificials]
  std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos_col[j] = ncols++;
    if (!sys.is_nonnegative(j)) neg_col[j] = ncols++;
  }
  const std::size_t t_col = has_strict ? ncols++ : SIZE_MAX;

  struct Row {
    std::vector<std::pair<std::size_t, Rational>> entries;
    bool slack = false;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : sys.constraints) {
    Row r;
    for (std::size_t j = 0; j < nv; ++j) {
      if (sgn(c.coeffs[j]) == 0) continue;
      r.entries.emplace_back(pos_col[j], c.coeffs[j]);
      if (neg_col[j] != SIZE_MAX) r.entries.emplace_back(neg_col[j], -c.coeffs[j]);
    }
    if (c.relation == Relation::Less) r.entries.emplace_back(t_col, Rational(1));
    r.slack = c.relation != Relation::Equal;
    r.rhs = c.rhs;
    rows.push_back(std::move(r));
  }
  if (has_strict) rows.push_back(Row{{{t_col, Rational(1)}}, true, Rational(1)});

  const std::size_t m = rows.size();
  std::size_t slack_count = 0;
  for (const auto& r : rows) slack_count += r.slack ? 1 : 0;
  const std::size_t first_slack = ncols;
  const std::size_t first_art = first_slack + slack_count;

  // A slack with coefficient +1 after sign normalization can start basic;
  // every other row gets an artificial.
  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(rows[i].rhs) < 0;
    if (!(rows[i].slack && !flip)) art_rows.push_back(i);
  }
  const std::size_t total = first_art + art_rows.size();
  RatMatrix a(m, zeros(total));
  RatVector b(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = first_slack, next_art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(rows[i].rhs) < 0;
    const int s = flip ? -1 : 1;
    for (const auto& [col, v] : rows[i].entries) a[i][col] += s * v;
    b[i] = s * rows[i].rhs;
    if (rows[i].slack) {
      a[i][next_slack] = s;
      if (!flip) basis[i] = next_slack;
      ++next_slack;
    }
    if (rows[i].slack && !flip) continue;
    a[i][next_art] = 1;
    basis[i] = next_art++;
  }

  detail::Tableau tab(std::move(a), std::move(b), std::move(basis));
  if (!art_rows.empty()) {
    RatVector phase1 = zeros(total);
    for (std::size_t j = first_art; j < total; ++j) phase1[j] = -1;
    tab.maximize(phase1, std::vector<bool>(total, true));
    const RatVector y = tab.solution();
    for (std::size_t j = first_art; j < total; ++j)
      if (sgn(y[j]) != 0) return {};
    tab.expel(first_art);
  }

  std::vector<bool> allowed(total, true);
  for (std::size_t j = first_art; j < total; ++j) allowed[j] = false;
  if (has_strict) {
    RatVector phase2 = zeros(total);
    phase2[t_col] = 1;
    tab.maximize(phase2, allowed);  // bounded by t <= 1
    if (sgn(tab.solution()[t_col]) <= 0) return {};
  }

  const RatVector y = tab.solution();
  RatVector x(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    x[j] = y[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) x[j] -= y[neg_col[j]];
  }
  return {true, std::move(x)};
}

}  // namespace tightsurf
