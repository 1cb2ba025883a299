#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/caps.hpp"
#include "pointfree/term.hpp"

namespace pointfree {

/** A two-valued model of a presentation: one boolean per generator. */
struct LatticePoint {
  std::vector<std::string> generators;  // shared generator order
  std::vector<bool> values;             // aligned with generators

  bool value(const std::string& name) const;
};

/** A bounded distributive lattice, presented either by generators and
 * relations (each relation an inequality lhs ≤ rhs between terms) or by
 * generators and an entailment oracle.
 *
 * In relations mode every query runs through all two-valued models of the
 * relations, which is sound and complete for distributive lattices: an
 * inequality holds in the presented lattice iff it holds in every
 * {0,1}-model of the relations.  The model count is 2^#generators, so the
 * generator count is capped (see caps.hpp).
 *
 * Oracle mode delegates entailment and answers no model queries.
 */
class DLatticePresentation {
 public:
  using Relation = std::pair<LatticeTerm, LatticeTerm>;
  using Oracle = std::function<bool(const LatticeTerm&, const LatticeTerm&)>;
  enum class Orientation { original, opposite };

  static DLatticePresentation with_relations(std::vector<std::string> generators,
                                             std::vector<Relation> relations);
  static DLatticePresentation with_oracle(std::vector<std::string> generators,
                                          Oracle oracle);

  bool oracle_mode() const { return static_cast<bool>(oracle_); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const;
  const Oracle& oracle() const;

  Orientation orientation() const { return orientation_; }
  void set_orientation(Orientation o) { orientation_ = o; }

  /** Raises InputError if the term mentions a name outside generators(). */
  void check_term(const LatticeTerm& t) const;

  /** Index of a generator name, or InputError. */
  std::size_t index_of(const std::string& name) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
  Oracle oracle_;
  Orientation orientation_ = Orientation::original;
};

/** Validates the term against the presentation and returns its normal form.
 * (LatticeTerm values are kept normalized, so this is a checked identity.) */
LatticeTerm normalize(const DLatticePresentation& lattice, const LatticeTerm& t);

/** Decides lhs ≤ rhs in the presented lattice. */
bool entails(const DLatticePresentation& lattice, const LatticeTerm& lhs,
             const LatticeTerm& rhs, const Caps& caps = default_caps());

/** Entailment in both directions. */
bool lattice_eq(const DLatticePresentation& lattice, const LatticeTerm& a,
                const LatticeTerm& b, const Caps& caps = default_caps());

LatticeTerm term_meet(const DLatticePresentation& lattice, const LatticeTerm& a,
                      const LatticeTerm& b);
LatticeTerm term_join(const DLatticePresentation& lattice, const LatticeTerm& a,
                      const LatticeTerm& b);

/** All two-valued models of the relations, in lexicographic order of the
 * generator value tuples.  Relations mode only. */
std::vector<LatticePoint> points(const DLatticePresentation& lattice,
                                 const Caps& caps = default_caps());

/** Checks the finite representation theorem for the presented lattice:
 * evaluation identifies the lattice of terms (modulo entailment) with the
 * lattice of up-closed subsets of the pointwise-ordered model set.
 * Returns true for every consistent presentation; a one-element lattice
 * (no models) is accepted as well. */
bool birkhoff_roundtrip(const DLatticePresentation& lattice,
                        const Caps& caps = default_caps());

/** A finite join of terms, standing for an element of the frame of ideals
 * of the presented lattice.  Only the order is exposed; no infinite joins
 * are represented. */
using FrameElement = std::vector<LatticeTerm>;

bool frame_leq(const DLatticePresentation& lattice, const FrameElement& a,
               const FrameElement& b, const Caps& caps = default_caps());
FrameElement frame_meet(const FrameElement& a, const FrameElement& b);
FrameElement frame_join(const FrameElement& a, const FrameElement& b);

/** Every normal-form term over the given generators (all antichains of
 * generator subsets).  Capped by caps.universe_generators. */
std::vector<LatticeTerm> term_universe(const std::vector<std::string>& generators,
                                       const Caps& caps = default_caps());

/** Precompiled model set for repeated entailment queries over one
 * relations-mode presentation. */
class ModelSet {
 public:
  static ModelSet of(const DLatticePresentation& lattice,
                     const Caps& caps = default_caps());

  bool leq(const LatticeTerm& lhs, const LatticeTerm& rhs) const;
  std::size_t model_count() const { return models_.size(); }
  bool eval(const LatticeTerm& t, std::uint64_t model) const;
  const std::vector<std::uint64_t>& models() const { return models_; }
  const std::vector<std::string>& generators() const { return generators_; }

 private:
  std::vector<std::string> generators_;
  std::vector<std::uint64_t> models_;

  std::vector<std::uint64_t> compile(const LatticeTerm& t) const;
};

}  // namespace pointfree
