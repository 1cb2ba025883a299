#pragma once

#include <vector>

#include "pointfree/complexes.hpp"

namespace pointfree {

/** The two standard complexes attached to a finite list of elements
 * f_1, …, f_n of a PID:
 *
 *   - cech: terms indexed by the nonempty subsets S, in degree -(|S|-1),
 *     standing for the localization R[1/∏_{i∈S} f_i];
 *   - stable_koszul: terms indexed by all subsets (∅ contributes R itself
 *     in degree 0), each in degree -|S|.
 *
 * Both carry the alternating-sign inclusion maps S → S ∪ {i}.  The
 * infinite colimit is never materialized; it is approached through the
 * finite stages (entries f_i^k) or collapsed into the top localization. */
enum class CoveringModel { cech, stable_koszul };

struct CoveringComplex {
  RingPtr ring;
  std::vector<Value> gens;
  CoveringModel model = CoveringModel::cech;
};

/** Validates: 1..cap elements, all nonzero, PID ring. */
CoveringComplex make_covering(RingPtr ring, std::vector<Value> gens, CoveringModel model,
                              const Caps& caps = default_caps());

/** The stage-k approximation over R: each inclusion S → S ∪ {i} becomes
 * multiplication by f_i^k. */
ChainComplex covering_stage(const CoveringComplex& cov, unsigned k);

/** The chain map from stage k to stage k+1 (the S-component multiplies by
 * ∏_{i∈S} f_i). */
ChainMap covering_transition(const CoveringComplex& cov, unsigned k);

/** R[1/(f_1 ⋯ f_n)]. */
RingPtr covering_top_ring(const CoveringComplex& cov);

/** The complex with every term collapsed into the top localization: all
 * inclusions become ±1.  This is the faithful place to read off
 * localization-invariance, since each f_i is a unit there. */
ChainComplex covering_over_top(const CoveringComplex& cov);

/** Every finite stage has homology annihilated by a power of (f_1,…,f_n). */
bool covering_is_torsion(const CoveringComplex& cov, unsigned stages = 3);

/** Each f_i acts invertibly on the homology of the collapsed complex. */
bool covering_invertible(const CoveringComplex& cov);

/** (R[1/g] / R)^copies, the shape of first local cohomology over a PID.
 * Kept symbolic: the module is not finitely generated, but it is
 * determined by g up to radical and by the copy count. */
struct CokernelPower {
  RingPtr ring;
  Value g;
  std::size_t copies = 0;

  std::string str() const;
};

/** Stage k of the cokernel tower: (R/(g^k))^copies, with transition ×g
 * into stage k+1. */
ModulePresentation cokernel_stage(const CokernelPower& c, unsigned k);

/** Torsion cohomology of a module at a finitely generated ideal of a PID.
 * The ideal collapses to its Bezout generator g = gcd(gens); then
 *
 *   H⁰ picks out of each cyclic factor R/(d) the part of d supported on
 *   the primes of g, and   H¹ = (R[1/g]/R)^{free rank}.
 *
 * Higher cohomology vanishes over a PID.  g = 0 gives H⁰ = M, H¹ = 0;
 * a unit g gives 0, 0. */
struct LocalCohomology {
  RingPtr ring;
  Value g;                 // canonical Bezout generator of the ideal
  ModulePresentation h0;
  CokernelPower h1;
};

LocalCohomology local_cohomology(const RingPtr& ring, const std::vector<Value>& ideal_gens,
                                 const ModulePresentation& m);

/** Isomorphism of the cohomology values (not of the defining ideals):
 * H⁰ as modules, H¹ by copy count and equality of the localizations. */
bool cohomology_isomorphic(const LocalCohomology& a, const LocalCohomology& b);

}  // namespace pointfree
