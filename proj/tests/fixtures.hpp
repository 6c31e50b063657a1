#pragma once

// Shared test fixtures: one corpus Dataset for the whole test binary plus
// thin accessors matching the names the test files use.

#include <string>
#include <vector>

#include "symsing/dataset.hpp"
#include "symsing/poly.hpp"
#include "symsing/reflgroup.hpp"

namespace fixtures {

using namespace symsing;

inline const Dataset& dataset() {
  static Dataset d{std::string(SYMSING_CORPUS_DIR)};
  return d;
}

inline std::string corpus_path(const std::string& name) {
  return dataset().path(name);
}

// Short generator-matrix names, matching the group presentation order.
inline Matrix gen_a() { return group_gen_a(); }
inline Matrix gen_b() { return group_gen_b(); }
inline Matrix gen_c() { return group_gen_c(); }
inline Matrix gen_d() { return group_gen_d(); }

inline const Ring& upstairs_ring() { return dataset().upstairs_ring(); }
inline const Ring& ambient_ring() { return dataset().ambient_ring(); }
inline const Ring& chart_ring() { return dataset().chart_ring(); }

inline const NamedExprs& semi_invariants() {
  return dataset().semi_invariants();
}
inline const NamedExprs& ambient_generators() {
  return dataset().ambient_generators();
}
inline const NamedExprs& locus_generators() {
  return dataset().locus_generators();
}
inline const NamedExprs& ambient_relations() {
  return dataset().ambient_relations();
}
inline const NamedExprs& chart_relations() {
  return dataset().chart_relations();
}
inline const NamedExprs& chart_generator_fractions() {
  return dataset().chart_fractions();
}
inline const NamedExprs& chart_expressions() {
  return dataset().chart_expressions();
}

inline std::vector<FracPoly> chart_generator_list() {
  return dataset().chart_generator_list();
}

}  // namespace fixtures
