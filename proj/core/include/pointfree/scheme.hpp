#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pointfree/complexes.hpp"
#include "pointfree/ring.hpp"
#include "pointfree/zariski.hpp"

namespace pointfree {

/** Raw gluing data between pieces i and j: the overlap is the principal
 * open D(f_ij) on the i side and D(f_ji) on the j side, and phi_images
 * sends the variables of piece i's coordinate ring to elements of the
 * j-side overlap ring (phi_inv_images the other way around). */
struct RawGluing {
  std::size_t i = 0;
  std::size_t j = 0;
  Value f_ij;
  Value f_ji;
  std::map<std::string, Value> phi_images;
  std::map<std::string, Value> phi_inv_images;
};

struct SchemeDatum {
  std::vector<RingPtr> pieces;
  std::vector<RawGluing> gluings;
};

struct Gluing {
  std::size_t i = 0;
  std::size_t j = 0;
  Value f_ij;
  Value f_ji;
  RingPtr overlap_ij;  // pieces[i] localized at f_ij
  RingPtr overlap_ji;  // pieces[j] localized at f_ji
  RingHom phi;         // overlap_ij -> overlap_ji
  RingHom phi_inv;     // overlap_ji -> overlap_ij
};

struct Scheme {
  std::vector<RingPtr> pieces;
  std::vector<Gluing> gluings;
};

/** Validates the datum: 1–3 pieces, well-defined transition maps that are
 * mutually inverse on generators, and the cocycle identity on every
 * triple of pairwise-glued pieces. */
Scheme glue(const SchemeDatum& datum);

/** An open of the glued space, one radical ideal per piece, agreeing on
 * the overlaps. */
struct GlobalOpen {
  std::vector<RadicalIdeal> parts;
};

/** Checks the parts match the pieces and are compatible across every
 * gluing (the transported restriction equals the other restriction). */
GlobalOpen make_global_open(const Scheme& scheme, std::vector<RadicalIdeal> parts);

bool global_entails(const Scheme& scheme, const GlobalOpen& a, const GlobalOpen& b);
GlobalOpen global_meet(const Scheme& scheme, const GlobalOpen& a, const GlobalOpen& b);
GlobalOpen global_join(const Scheme& scheme, const GlobalOpen& a, const GlobalOpen& b);

/** O(D(f)) on the given piece: the localization at f. */
RingPtr structure_sheaf_value(const Scheme& scheme, std::size_t piece, const Value& f);

/** The restriction O(D(from_f)) → O(D(to_f)); requires D(to_f) ⊆ D(from_f),
 * i.e. from_f invertible wherever to_f is. */
RingHom restriction_map(const Scheme& scheme, std::size_t piece, const Value& from_f,
                        const Value& to_f);

/** Global sections of the structure sheaf.  For diagrams of
 * ZZ-localizations the equalizer is computed exactly as a ring; for
 * univariate polynomial pieces the sections of degree ≤ bound are found
 * by exact linear algebra over the coefficient field, reporting the
 * dimension and whether it has stabilized (zero second difference at
 * bound-1, bound, bound+1). */
struct GlobalSections {
  std::optional<RingPtr> ring;
  std::size_t dimension = 0;
  bool stable = true;
};

GlobalSections global_sections(const Scheme& scheme, unsigned bound);

/** The sheaf condition for the cover of D(f) by the D(g_l) over a PID
 * domain R: the cover must be legitimate (equal radicals), and every
 * compatible family n_l / g_l^exponent must lift to R[1/f] (witness
 * exponents are searched up to exponent + 64).  Uniqueness is automatic
 * over a domain. */
struct SheafCheckReport {
  bool covers = false;
  bool descends = false;

  bool pass() const { return covers && descends; }
};

SheafCheckReport sheaf_condition_check(const RingPtr& ring, const Value& f,
                                       const std::vector<Value>& cover,
                                       unsigned exponent = 3);

/** The value ZZ/gcd(gens) of the cut-out-subscheme presheaf over ZZ (or
 * over ZZ/n, lifting and adjoining n).  gcd = 0 gives ZZ back; a unit
 * gcd is rejected (the value would be the zero ring). */
RingPtr domain_presheaf_value(const RingPtr& ring, const std::vector<Value>& gens);

/** Restriction along an inclusion of cut-out subschemes; requires the
 * target gcd to divide the source gcd. */
RingHom domain_presheaf_restriction(const RingPtr& ring, const std::vector<Value>& from_gens,
                                    const std::vector<Value>& to_gens);

/** Round trip between ring-theoretic and complex-theoretic data on each
 * piece: the Koszul complex of every sampled ideal must have support
 * equal to the ideal's radical, the induced order must reverse ideal
 * inclusion, and pushing supports through a gluing must agree with
 * transporting the ideals.  samples[p] lists the ideals for piece p. */
struct ReconstructionReport {
  bool pass = true;
  std::vector<std::string> failures;
};

ReconstructionReport reconstruction_check(const Scheme& scheme,
                                          const std::vector<std::vector<RadicalIdeal>>& samples);

}  // namespace pointfree
