#pragma once

#include <cstddef>

namespace pointfree {

/** Size caps for the enumeration-based algorithms.
 *
 * Entailment in a finitely presented distributive lattice is decided by
 * running through all 2^n two-valued models, so the generator count is
 * capped; likewise the covering complexes are capped in the number of
 * inverted elements.  The caps are deliberately small: the library targets
 * desk-scale inputs, not bulk computation.  The CLI lets users override
 * them through the POINTFREE_CAP environment variable.
 */
struct Caps {
  std::size_t lattice_generators = 24;  // 2^n model enumeration
  std::size_t covering_elements = 6;    // inverted elements per covering complex
  std::size_t universe_generators = 5;  // full normal-form universe enumeration
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace pointfree
