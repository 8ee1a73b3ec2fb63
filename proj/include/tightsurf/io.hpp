#pragma once

// File formats. PEC is the exact exchange format:
//
//   PEC 1
//   dim <n>
//   v <id> <q_1> ... <q_n>      q as an integer or p/q
//   f <id_1> ... <id_k>
//   # comment
//
// OFF is a lossy decimal export for viewers; JSON keeps the rationals as strings.

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tightsurf/complex.hpp"

namespace tightsurf {

inline void write_pec(std::ostream& out, const Embedding& e, const std::vector<std::string>& comments = {}) {
  check_coordinates(e);
  out << "PEC 1\n";
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "dim " << e.dimension << "\n";
  for (int v = 0; v < e.surface.num_vertices; ++v) {
    out << "v " << v;
    for (const auto& q : e.point(v)) out << ' ' << to_string(q);
    out << "\n";
  }
  for (const auto& f : e.surface.faces) {
    out << "f";
    for (int v : f) out << ' ' << v;
    out << "\n";
  }
}

inline std::string to_pec(const Embedding& e, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  write_pec(os, e, comments);
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::optional<long> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  try {
    const long v = std::stol(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Parses PEC text. Throws ParseError (with the 1-based line) on malformed
/// input; the surface itself is not validated here.
inline Embedding read_pec(std::istream& in) {
  Embedding e;
  std::string line;
  int lineno = 0;
  bool header = false, have_dim = false;
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "PEC" || tok[1] != "1") fail("expected header 'PEC 1'");
      header = true;
      continue;
    }
    if (tok[0] == "dim") {
      if (have_dim) fail("duplicate dim line");
      const auto n = tok.size() == 2 ? detail::parse_int(tok[1]) : std::nullopt;
      if (!n || *n < 1) fail("bad dim line");
      e.dimension = static_cast<int>(*n);
      have_dim = true;
    } else if (tok[0] == "v") {
      if (!have_dim) fail("vertex before dim line");
      const auto id = tok.size() >= 2 ? detail::parse_int(tok[1]) : std::nullopt;
      if (!id || *id != e.surface.num_vertices) fail("vertex ids must be consecutive from 0");
      if (static_cast<int>(tok.size()) != 2 + e.dimension) fail("vertex " + tok[1] + " needs " + std::to_string(e.dimension) + " coordinates");
      RatVector p;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        auto q = parse_rational(tok[i]);
        if (!q) fail("bad coordinate '" + tok[i] + "'");
        p.push_back(*q);
      }
      e.coords.push_back(std::move(p));
      ++e.surface.num_vertices;
    } else if (tok[0] == "f") {
      if (tok.size() < 4) fail("a face needs at least 3 vertices");
      Face f;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto id = detail::parse_int(tok[i]);
        if (!id || *id < 0) fail("bad vertex id '" + tok[i] + "'");
        f.push_back(static_cast<int>(*id));
      }
      e.surface.faces.push_back(std::move(f));
    } else {
      fail("unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError("empty input", lineno);
  if (!have_dim) throw ParseError("missing dim line", lineno);
  for (const auto& f : e.surface.faces)
    for (int v : f)
      if (v >= e.surface.num_vertices) throw ParseError("face refers to unknown vertex " + std::to_string(v), lineno);
  return e;
}

inline Embedding read_pec_string(const std::string& text) {
  std::istringstream is(text);
  return read_pec(is);
}

inline Embedding read_pec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_pec(in);
}

/// Decimal rendering with `digits` significant digits.
inline std::string decimal(const Rational& q, int digits) {
  mpf_class f(q, 512);
  char buf[256];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, f.get_mpf_t());
  return buf;
}

/// OFF mesh; `project` selects the coordinates kept (required above R^3).
inline void write_off(std::ostream& out, const Embedding& e, int digits = 12, const std::vector<int>& project = {}) {
  check_coordinates(e);
  std::vector<int> axes = project;
  if (axes.empty()) {
    if (e.dimension > 3) throw PreconditionError("OFF export from R^" + std::to_string(e.dimension) + " needs a projection");
    for (int i = 0; i < e.dimension; ++i) axes.push_back(i);
  }
  if (axes.size() > 3) throw PreconditionError("projection keeps at most 3 coordinates");
  for (int a : axes)
    if (a < 0 || a >= e.dimension) throw PreconditionError("projection axis " + std::to_string(a) + " out of range");
  out << "OFF\n";
  out << "# decimal approximation (" << digits << " significant digits); exact coordinates live in the PEC file\n";
  if (!project.empty()) {
    out << "# orthogonal projection onto coordinates";
    for (int a : axes) out << ' ' << a;
    out << "\n";
  }
  out << e.surface.num_vertices << ' ' << e.surface.faces.size() << " 0\n";
  for (const auto& p : e.coords) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) out << ' ';
      out << (i < axes.size() ? decimal(p[static_cast<std::size_t>(axes[i])], digits) : "0");
    }
    out << "\n";
  }
  for (const auto& f : e.surface.faces) {
    out << f.size();
    for (int v : f) out << ' ' << v;
    out << "\n";
  }
}

inline nlohmann::json embedding_to_json(const Embedding& e) {
  check_coordinates(e);
  nlohmann::json j;
  j["dimension"] = e.dimension;
  j["vertices"] = nlohmann::json::array();
  for (const auto& p : e.coords) {
    auto row = nlohmann::json::array();
    for (const auto& q : p) row.push_back(to_string(q));
    j["vertices"].push_back(row);
  }
  j["faces"] = e.surface.faces;
  return j;
}

inline Embedding embedding_from_json(const nlohmann::json& j) {
  try {
    Embedding e;
    e.dimension = j.at("dimension").get<int>();
    for (const auto& row : j.at("vertices")) {
      RatVector p;
      for (const auto& s : row) {
        auto q = parse_rational(s.get<std::string>());
        if (!q) throw ParseError("bad rational '" + s.get<std::string>() + "'", 0);
        p.push_back(*q);
      }
      e.coords.push_back(std::move(p));
    }
    e.surface.num_vertices = static_cast<int>(e.coords.size());
    e.surface.faces = j.at("faces").get<std::vector<Face>>();
    check_coordinates(e);
    return e;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("json: ") + err.what(), 0);
  } catch (const PreconditionError& err) {
    throw ParseError(err.what(), 0);
  }
}

}  // namespace tightsurf
