// Builds every catalog surface with p <= 4 and prints one line per entry:
// type, ambient dimension, c0, and whether the embedding certifies as tight.

#include <iomanip>
#include <iostream>

#include "tightsurf/tightsurf.hpp"

int main() {
  using namespace tightsurf;
  for (const auto& name : catalog_names()) {
    const int p = name.back() == 'h' ? 2 : name.back() - '0';
    if (p > 4) continue;
    const auto b = build_catalog(name);
    const auto v = is_tight_surface(b.embedding);
    const auto audit = theorem1_audit(b.embedding, b.entry.closed, b.entry.p);
    std::cout << std::left << std::setw(11) << name << std::setw(52) << describe(validate_surface(b.embedding.surface))
              << " V=" << std::setw(3) << b.embedding.surface.num_vertices << " R^" << b.embedding.dimension
              << "  c0=" << b.entry.c0 << "  tight=" << (v.tight ? "yes" : "no") << "  audit=" << (audit.passed ? "ok" : "FAIL")
              << "\n";
  }
}
