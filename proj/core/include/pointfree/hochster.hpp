#pragma once

#include <utility>
#include <vector>

#include "pointfree/lattice.hpp"

namespace pointfree {

/** The opposite lattice of a presentation, over the same generators.
 *
 * A distributive lattice read upside down is again distributive, and for
 * the lattices arising from spectral spaces this flip is the classical
 * duality on the space.  Relations mode materializes the flipped
 * relations: each l ≤ r becomes flip(r) ≤ flip(l), where flip swaps meets
 * and joins.  Oracle mode stays lazy: queries are flipped and forwarded,
 * so no term enumeration ever happens on the oracle's behalf.
 *
 * The returned presentation carries the toggled orientation tag. */
DLatticePresentation dual_lattice(const DLatticePresentation& lattice);

/** Checks that dualizing twice gives back the original entailment:
 * compares entails(L, ·, ·) with entails(dual(dual(L)), ·, ·) over the
 * full normal-form term universe when the generator count permits
 * enumeration, and over the generators' meets/joins otherwise. */
bool double_dual_check(const DLatticePresentation& lattice,
                       const Caps& caps = default_caps());

/** Points of the dual paired with points of the original.  The complement
 * valuation g ↦ 1 − v(g) of a model of L is a model of the flipped
 * relations, and this pairing is the classical bijection between the two
 * point sets.  Returns (point of L, matching point of dual) pairs and
 * throws if the pairing fails to be a bijection. */
std::vector<std::pair<LatticePoint, LatticePoint>> dual_points(
    const DLatticePresentation& lattice, const Caps& caps = default_caps());

}  // namespace pointfree
