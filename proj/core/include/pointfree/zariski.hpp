#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pointfree/lattice.hpp"
#include "pointfree/ring.hpp"

namespace pointfree {

/** √(g₁,…,gₙ) as a raw generator list; equality is always the two-sided
 * radical-membership test, never canonicalization. */
struct RadicalIdeal {
  RingPtr ring;
  std::vector<Value> gens;
};

RadicalIdeal radical_ideal(RingPtr ring, std::vector<Value> gens);
RadicalIdeal zar_support(const RingPtr& ring, const Value& f);  // √(f)
RadicalIdeal zar_top(const RingPtr& ring);                      // √(1)
RadicalIdeal zar_bottom(const RingPtr& ring);                   // √(0)

bool radical_contains(const RadicalIdeal& I, const Value& f);  // f ∈ √I
bool zar_leq(const RadicalIdeal& I, const RadicalIdeal& J);    // √I ⊆ √J
bool zar_eq(const RadicalIdeal& I, const RadicalIdeal& J);
RadicalIdeal zar_join(const RadicalIdeal& I, const RadicalIdeal& J);  // √(I+J)
RadicalIdeal zar_meet(const RadicalIdeal& I, const RadicalIdeal& J);  // √(I·J)

/** A radical ideal read as an element of one of the two dual lattices:
 * D(I) ordered by √I ⊆ √J, or Z(I) ordered the opposite way. */
enum class OpenKind { zariski, hochster };

struct LatticeOpen {
  OpenKind kind;
  RadicalIdeal ideal;
};

LatticeOpen zariski_open(RadicalIdeal I);
LatticeOpen hochster_open(RadicalIdeal I);
bool open_leq(const LatticeOpen& a, const LatticeOpen& b);
bool open_eq(const LatticeOpen& a, const LatticeOpen& b);
LatticeOpen open_meet(const LatticeOpen& a, const LatticeOpen& b);
LatticeOpen open_join(const LatticeOpen& a, const LatticeOpen& b);

/** A support datum: a ring, a target lattice, and the assignment f ↦ d(f).
 * The assignment must produce terms over the target's generators. */
struct SupportMap {
  RingPtr ring;
  DLatticePresentation lattice;
  std::function<LatticeTerm(const Value&)> d;
};

struct AxiomReport {
  bool pass = true;
  std::vector<std::string> violations;
};

/** Checks d(1)=TOP, d(0)=BOTTOM, d(fg)=d(f)∧d(g) and d(f+g) ≤ d(f)∨d(g)
 * for all pairs drawn from the sample. */
AxiomReport verify_support_axioms(const SupportMap& sm, const std::vector<Value>& sample);

/** The unique frame-map extension evaluated on a finite element:
 * √(g₁,…,gₙ) ↦ d(g₁) ∨ … ∨ d(gₙ). */
LatticeTerm universal_support_map(const SupportMap& sm, const RadicalIdeal& I);

/** Pushes a radical ideal forward along a ring map (generator images). */
RadicalIdeal induced_map(const RingHom& hom, const RadicalIdeal& I);

/** Membership of a point (prime element; 0 = generic) in an open.
 * Composite integer witnesses up to 10⁶ are rejected. */
bool point_contains(const Value& p, const LatticeOpen& open);

/** 0 followed by the primes ≤ bound (ZZ only). */
std::vector<Value> enumerate_primes(const RingPtr& ring, const Int& bound);

/** The Zariski lattice on symbols D(g), entailment backed by radical
 * membership (oracle mode).  Duplicate generators are collapsed. */
DLatticePresentation zariski_lattice(const RingPtr& ring, const std::vector<Value>& gens);

/** Support into the powerset of a set of integer primes:
 * d(f) = join of the atoms for the primes not dividing f. */
SupportMap powerset_support(const RingPtr& ring, const std::vector<Int>& primes);

/** The ring's own Zariski support read as a SupportMap whose target is
 * zariski_lattice over the given universe (universe must contain, up to
 * associates, every element the caller will evaluate). */
SupportMap self_support(const RingPtr& ring, const std::vector<Value>& universe);

}  // namespace pointfree
