#pragma once

// Chromatic invariants of surfaces: the Heawood number of a closed surface
// and bounds / published values for the relative chromatic number of S_p
// (S with p open disks removed).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "tightsurf/error.hpp"

namespace tightsurf {

struct ClosedSurfaceId {
  bool orientable = true;
  int genus = 0;  // handles if orientable, crosscaps otherwise

  static ClosedSurfaceId sphere() { return {true, 0}; }
  static ClosedSurfaceId torus() { return {true, 1}; }
  static ClosedSurfaceId projective_plane() { return {false, 1}; }
  static ClosedSurfaceId klein_bottle() { return {false, 2}; }

  int euler() const { return orientable ? 2 - 2 * genus : 2 - genus; }
  bool is_klein_bottle() const { return !orientable && genus == 2; }

  void check() const {
    if (genus < 0) throw PreconditionError("negative genus");
    if (!orientable && genus == 0) throw PreconditionError("non-orientable surfaces have at least one crosscap");
  }

  friend auto operator<=>(const ClosedSurfaceId&, const ClosedSurfaceId&) = default;
};

inline std::string describe(const ClosedSurfaceId& s) {
  if (s.orientable) return s.genus == 0 ? "sphere" : "orientable genus " + std::to_string(s.genus);
  return std::to_string(s.genus) + " crosscap(s)";
}

enum class ChromaticSource { Table, Formula, TheoremEndpoint };

inline const char* to_string(ChromaticSource s) {
  switch (s) {
    case ChromaticSource::Table: return "table";
    case ChromaticSource::Formula: return "formula";
    case ChromaticSource::TheoremEndpoint: return "theorem-endpoint";
  }
  return "?";
}

struct ChromaticAnswer {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  ChromaticSource source = ChromaticSource::Formula;
};

namespace detail {

inline long isqrt(long x) {
  if (x < 0) throw PreconditionError("square root of a negative number");
  mpz_class r;
  mpz_class v(x);
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r.get_si();
}

// floor((base + sqrt(disc)) / 2) == floor((base + isqrt(disc)) / 2) for integer base
inline int half_floor(long base, long disc) { return static_cast<int>((base + isqrt(disc)) / 2); }

}  // namespace detail

/// Chromatic number c(S) of a closed surface; 6 for the Klein bottle.
inline int heawood_number(const ClosedSurfaceId& s) {
  s.check();
  if (s.is_klein_bottle()) return 6;
  return detail::half_floor(7, 49 - 24L * s.euler());
}

/// Upper bound (5 + sqrt(25 - 24 chi + 24 p)) / 2, floored.
inline int relative_formula_bound(const ClosedSurfaceId& s, int p) {
  return detail::half_floor(5, 25 - 24L * s.euler() + 24L * p);
}

using KnownTable = std::map<std::pair<ClosedSurfaceId, int>, std::optional<int>>;

/// Published relative chromatic numbers for p = 1..4; nullopt marks an open entry.
inline const KnownTable& known_tables() {
  static const KnownTable table = [] {
    KnownTable t;
    auto put = [&t](bool orientable, int genus, std::initializer_list<int> rows) {
      int p = 1;
      for (int v : rows) {
        t[{ClosedSurfaceId{orientable, genus}, p}] = v > 0 ? std::optional<int>(v) : std::nullopt;
        ++p;
      }
    };
    // orientable surfaces, genus 0..4; 0 marks "?"
    put(true, 0, {3, 4, 4, 4});
    put(true, 1, {6, 6, 7, 7});
    put(true, 2, {7, 8, 8, 8});
    put(true, 3, {8, 0, 9, 9});
    put(true, 4, {9, 9, 10, 10});
    // non-orientable surfaces, 1..9 crosscaps
    put(false, 1, {5, 5, 6, 6});
    put(false, 2, {5, 6, 6, 6});
    put(false, 3, {6, 7, 7, 7});
    put(false, 4, {7, 0, 8, 8});
    put(false, 5, {8, 8, 9, 9});
    put(false, 6, {8, 0, 9, 9});
    put(false, 7, {9, 9, 9, 10});
    put(false, 8, {9, 0, 0, 10});
    put(false, 9, {9, 0, 10, 10});
    return t;
  }();
  return table;
}

inline std::optional<int> table_value(const ClosedSurfaceId& s, int p) {
  const auto& t = known_tables();
  const auto it = t.find({s, p});
  return it == t.end() ? std::nullopt : it->second;
}

/// Relative chromatic number c_0(S_p): a published value when available,
/// otherwise bounds c(S)-1 .. min(c(S), formula) tightened by monotonicity
/// in p against neighboring published rows, with the exact endpoints
/// c(S)-1 at p = 1 and c(S) once 2p >= c(S) - 1.
inline ChromaticAnswer relative_chromatic(const ClosedSurfaceId& s, int p) {
  s.check();
  if (p < 1) throw PreconditionError("number of boundary components must be >= 1");
  if (auto v = table_value(s, p)) return {*v, *v, *v, ChromaticSource::Table};

  const int c = heawood_number(s);
  if (p == 1) return {c - 1, c - 1, c - 1, ChromaticSource::TheoremEndpoint};
  if (2 * p >= c - 1) return {c, c, c, ChromaticSource::TheoremEndpoint};

  int lower = c - 1;
  int upper = std::min(c, relative_formula_bound(s, p));
  for (const auto& [key, value] : known_tables()) {
    if (key.first != s || !value) continue;
    if (key.second < p) lower = std::max(lower, *value);
    if (key.second > p) upper = std::min(upper, *value);
  }
  if (lower > upper) throw Error("relative_chromatic: inconsistent bounds for " + describe(s));
  ChromaticAnswer ans{lower, upper, std::nullopt, ChromaticSource::Formula};
  if (lower == upper) ans.exact = lower;
  return ans;
}

}  // namespace tightsurf
