#pragma once

// Verification report: every check the library can run on an embedding,
// collected into a JSON tree with the failures listed by witness.

#include <string>
#include <vector>

#include <json.hpp>

#include "tightsurf/chromatic.hpp"
#include "tightsurf/complex.hpp"
#include "tightsurf/tightness.hpp"

namespace tightsurf {

struct VerifyOptions {
  bool with_oracle = false;
  OracleOptions oracle;
};

struct VerifyResult {
  nlohmann::json report;
  bool ok = false;  // tight, substantial, and every requested check passed
};

inline nlohmann::json to_json(const SurfaceType& t) {
  return {{"orientable", t.orientable}, {"genus", t.genus}, {"boundary_components", t.boundary_components},
          {"components", t.components}, {"description", describe(t)}};
}

inline VerifyResult verify_embedding(const Embedding& e, const VerifyOptions& opt = {}) {
  using nlohmann::json;
  json r;
  json failures = json::array();
  auto fail = [&failures](const std::string& check, const std::string& witness) {
    failures.push_back({{"check", check}, {"witness", witness}});
  };
  auto done = [&](bool ok) {
    r["failures"] = failures;
    return VerifyResult{r, ok && failures.empty()};
  };

  r["dimension"] = e.dimension;
  r["vertices"] = e.surface.num_vertices;
  r["faces"] = e.surface.faces.size();
  try {
    check_coordinates(e);
  } catch (const Error& err) {
    fail("coordinates", err.what());
    return done(false);
  }

  SurfaceType type;
  try {
    type = validate_surface(e.surface);
  } catch (const SurfaceError& err) {
    fail("surface", err.what());
    return done(false);
  }
  r["surface_type"] = to_json(type);
  r["euler"] = type.euler;

  const auto emb = check_embeddedness(e);
  r["embedded"] = emb.ok;
  if (!emb.ok) {
    fail("embeddedness", emb.reason);
    return done(false);
  }

  const auto verdict = is_tight_surface(e);
  r["substantial"] = verdict.substantial;
  r["zero_tight"] = verdict.zero_tight;
  r["tight"] = verdict.tight;
  r["vertices_on_boundary"] = all_vertices_on_boundary(e.surface);
  r["extreme_vertices"] = verdict.skeleton.extreme_vertices;
  r["boundary_cycles"] = boundary_cycles(e.surface);
  if (!verdict.substantial) fail("substantial", "affine hull has dimension " + std::to_string(affine_rank(e.coords)));
  if (const auto& m = verdict.zero_tight_witness.missing_hull_edge)
    fail("zero_tight", "hull edge " + std::to_string(m->first) + "-" + std::to_string(m->second) + " not covered by the surface");
  if (const auto& v = verdict.zero_tight_witness.vertex_outside_neighbor_hull)
    fail("zero_tight", "vertex " + std::to_string(*v) + " is outside the hull of its neighbors");
  if (verdict.zero_tight && !verdict.tight)
    fail("tight", "extreme vertex " + std::to_string(verdict.interior_extreme_vertices.front()) + " is not on the boundary");

  // the dimension bound concerns bordered surfaces with a known closed model
  const bool bordered = type.boundary_components > 0 && type.components == 1;
  if (bordered && (type.orientable || type.genus > 0)) {
    const ClosedSurfaceId closed{type.orientable, type.genus};
    const auto audit = theorem1_audit(e, closed, type.boundary_components);
    json steps = json::array();
    for (const auto& s : audit.steps)
      steps.push_back({{"id", s.id}, {"description", s.description}, {"passed", s.passed}, {"detail", s.detail}});
    json witness = nullptr;
    if (audit.subdivision) witness = {{"branch", audit.subdivision->branch}, {"paths", audit.subdivision->paths}};
    r["theorem1"] = {{"n", audit.n},
                     {"c0_lower", audit.c0.lower},
                     {"c0_upper", audit.c0.upper},
                     {"c0_source", to_string(audit.c0.source)},
                     {"passed", audit.passed},
                     {"steps", steps},
                     {"subdivision_witness", witness}};
    // a failed precondition is already reported above
    if (const auto* s = audit.failed_step(); s && s->id != "precondition") fail("theorem1." + s->id, s->detail);
  } else {
    r["theorem1"] = nullptr;
  }

  if (opt.with_oracle) {
    try {
      const auto o = tpp_oracle(e, opt.oracle);
      json w = nullptr;
      if (o.witness) {
        json normal = json::array();
        for (const auto& q : o.witness->normal) normal.push_back(to_string(q));
        w = {{"normal", normal}, {"threshold", to_string(o.witness->threshold)}};
      }
      const bool agree = o.two_piece == verdict.zero_tight;
      r["oracle"] = {{"two_piece", o.two_piece},
                     {"agrees", agree},
                     {"normals_checked", o.normals_checked},
                     {"half_spaces_checked", o.half_spaces_checked},
                     {"seed", std::to_string(o.seed)},
                     {"witness", w}};
      if (!agree) fail("oracle", "two-piece oracle disagrees with the 0-tightness criterion");
    } catch (const ScaleError& err) {
      r["oracle"] = {{"skipped", err.what()}, {"seed", std::to_string(opt.oracle.seed)}};
    }
  }
  return done(verdict.tight && verdict.substantial);
}

}  // namespace tightsurf
