#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/lattice.hpp"
#include "pointfree/zariski.hpp"

namespace pointfree {

/** A finite presentation of the tensor-triangulated essentials of a
 * category: named objects (the names "one" and "zero" are reserved and
 * required), distinguished triangles a → b → c → Σa, and partial tables
 * for tensor products, direct sums, and retracts.  Only the data that
 * constrains supports is recorded. */
struct TTPresentation {
  std::vector<std::string> objects;
  std::vector<std::array<std::string, 3>> triangles;  // (a, b, c)
  std::vector<std::array<std::string, 3>> tensor;     // a ⊗ b = c
  std::vector<std::array<std::string, 3>> sum;        // a ⊕ b = c
  std::vector<std::pair<std::string, std::string>> retracts;  // (a, b): a | b
};

/** Validates names and tables; throws InputError on problems. */
TTPresentation make_tt(TTPresentation tt);

/** The term for supp(x): TOP for "one", BOTTOM for "zero", a generator
 * otherwise. */
LatticeTerm support_term(const std::string& object);

/** The support lattice: one generator per object (except one/zero), with
 *
 *   - tensor rows imposing supp(c) = supp(a) ∧ supp(b),
 *   - sum rows imposing supp(c) = supp(a) ∨ supp(b),
 *   - retract rows imposing supp(a) ≤ supp(b),
 *   - each triangle imposing middle ≤ join of the outer two, in all three
 *     rotations (suspension leaves support unchanged).
 */
DLatticePresentation build_lattice(const TTPresentation& tt);

/** supp(a) ≤ supp(b) in the support lattice. */
bool supp_leq(const TTPresentation& tt, const std::string& a, const std::string& b,
              const Caps& caps = default_caps());

/** A two-valued model of the support lattice, read as a prime thick
 * tensor ideal: the objects whose support evaluates to 0. */
struct SpectrumPoint {
  LatticePoint point;
  std::vector<std::string> prime_objects;
};

std::vector<SpectrumPoint> spectrum_points(const TTPresentation& tt,
                                           const Caps& caps = default_caps());

/** Support of a morphism that factors through the listed objects: the
 * meet of their supports (TOP for the empty list).  The morphism is
 * tensor-nilpotent precisely when this is bottom. */
struct MorphismSupport {
  LatticeTerm support;
  bool nilpotent = false;
};

MorphismSupport morphism_support(const TTPresentation& tt,
                                 const std::vector<std::string>& factors,
                                 const Caps& caps = default_caps());

/** A dictionary row: an object paired with the radical ideal its support
 * is expected to name. */
struct ObjectIdealPair {
  std::string object;
  RadicalIdeal ideal;
};

/** Checks that the dictionary is an order-reversing comparison: for every
 * pair of rows, supp(a) ≤ supp(b) in the support lattice iff
 * √J_b ⊆ √J_a in the ring.  Mismatched pairs are reported. */
struct ComparisonReport {
  bool order_isomorphic = true;
  std::vector<std::string> mismatches;
};

ComparisonReport compare_with_ring(const TTPresentation& tt,
                                   const std::vector<ObjectIdealPair>& dictionary,
                                   const Caps& caps = default_caps());

}  // namespace pointfree
