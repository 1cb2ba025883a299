#pragma once

#include <string>

#include "pointfree/caps.hpp"
#include "pointfree/lattice.hpp"

namespace pointfree {

/** Graphviz source for the Hasse diagram of the finite lattice presented by
 * `lattice`: one node per entailment class of terms, labeled by the class's
 * normal form, with an edge a -> b whenever b covers a (rankdir=BT, so the
 * bottom element renders lowest).  Node order follows the normal-form
 * universe, so the output is deterministic.  Shares the universe generator
 * cap. */
std::string lattice_dot(const DLatticePresentation& lattice,
                        const Caps& caps = default_caps());

/** Graphviz source for the pointwise-ordered poset of two-valued models.
 * Nodes are labeled by the set of generators the model sends to 1 and appear
 * in the same lexicographic order as points().  Relations mode only. */
std::string points_dot(const DLatticePresentation& lattice,
                       const Caps& caps = default_caps());

}  // namespace pointfree
