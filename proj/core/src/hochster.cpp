#include "pointfree/hochster.hpp"

#include <algorithm>

#include "pointfree/errors.hpp"

namespace pointfree {

DLatticePresentation dual_lattice(const DLatticePresentation& lattice) {
  const auto next_orientation =
      lattice.orientation() == DLatticePresentation::Orientation::original
          ? DLatticePresentation::Orientation::opposite
          : DLatticePresentation::Orientation::original;

  if (lattice.oracle_mode()) {
    auto inner = lattice.oracle();
    DLatticePresentation out = DLatticePresentation::with_oracle(
        lattice.generators(),
        [inner](const LatticeTerm& lhs, const LatticeTerm& rhs) {
          return inner(rhs.flip(), lhs.flip());
        });
    out.set_orientation(next_orientation);
    return out;
  }

  std::vector<DLatticePresentation::Relation> flipped;
  flipped.reserve(lattice.relations().size());
  for (const auto& [lhs, rhs] : lattice.relations())
    flipped.emplace_back(rhs.flip(), lhs.flip());
  DLatticePresentation out =
      DLatticePresentation::with_relations(lattice.generators(), std::move(flipped));
  out.set_orientation(next_orientation);
  return out;
}

bool double_dual_check(const DLatticePresentation& lattice, const Caps& caps) {
  DLatticePresentation dd = dual_lattice(dual_lattice(lattice));

  std::vector<LatticeTerm> probe;
  if (lattice.generators().size() <= caps.universe_generators) {
    probe = term_universe(lattice.generators(), caps);
  } else {
    // Fall back to a structured probe: generators, their pairwise meets
    // and joins, and the bounds.
    probe.push_back(LatticeTerm::bottom());
    probe.push_back(LatticeTerm::top());
    const auto& gens = lattice.generators();
    for (const auto& g : gens) probe.push_back(LatticeTerm::var(g));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        probe.push_back(LatticeTerm::var(gens[i]).meet(LatticeTerm::var(gens[j])));
        probe.push_back(LatticeTerm::var(gens[i]).join(LatticeTerm::var(gens[j])));
      }
  }

  if (!lattice.oracle_mode()) {
    auto ms = ModelSet::of(lattice, caps);
    auto ms_dd = ModelSet::of(dd, caps);
    for (const auto& a : probe)
      for (const auto& b : probe)
        if (ms.leq(a, b) != ms_dd.leq(a, b)) return false;
    return true;
  }
  for (const auto& a : probe)
    for (const auto& b : probe)
      if (entails(lattice, a, b, caps) != entails(dd, a, b, caps)) return false;
  return true;
}

std::vector<std::pair<LatticePoint, LatticePoint>> dual_points(
    const DLatticePresentation& lattice, const Caps& caps) {
  auto original = points(lattice, caps);
  auto dual = points(dual_lattice(lattice), caps);
  if (original.size() != dual.size())
    throw Error("dual point set has different cardinality");

  std::vector<std::pair<LatticePoint, LatticePoint>> out;
  out.reserve(original.size());
  std::vector<bool> used(dual.size(), false);
  for (const auto& p : original) {
    std::vector<bool> complement(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) complement[i] = !p.values[i];
    bool found = false;
    for (std::size_t k = 0; k < dual.size() && !found; ++k) {
      if (!used[k] && dual[k].values == complement) {
        used[k] = true;
        out.emplace_back(p, dual[k]);
        found = true;
      }
    }
    if (!found) throw Error("complement valuation is not a point of the dual");
  }
  return out;
}

}  // namespace pointfree
