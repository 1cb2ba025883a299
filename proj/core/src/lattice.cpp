#include "pointfree/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pointfree/errors.hpp"

namespace pointfree {

bool LatticePoint::value(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return values[i];
  throw InputError("unknown generator '" + name + "' in point lookup");
}

DLatticePresentation DLatticePresentation::with_relations(
    std::vector<std::string> generators, std::vector<Relation> relations) {
  DLatticePresentation L;
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw InputError("empty generator name");
    if (!seen.insert(g).second) throw InputError("duplicate generator '" + g + "'");
  }
  L.generators_ = std::move(generators);
  L.relations_ = std::move(relations);
  for (const auto& [lhs, rhs] : L.relations_) {
    L.check_term(lhs);
    L.check_term(rhs);
  }
  return L;
}

DLatticePresentation DLatticePresentation::with_oracle(
    std::vector<std::string> generators, Oracle oracle) {
  if (!oracle) throw InputError("null entailment oracle");
  DLatticePresentation L;
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw InputError("empty generator name");
    if (!seen.insert(g).second) throw InputError("duplicate generator '" + g + "'");
  }
  L.generators_ = std::move(generators);
  L.oracle_ = std::move(oracle);
  return L;
}

const std::vector<DLatticePresentation::Relation>& DLatticePresentation::relations() const {
  if (oracle_mode()) throw InputError("relations unavailable in oracle mode");
  return relations_;
}

const DLatticePresentation::Oracle& DLatticePresentation::oracle() const {
  if (!oracle_mode()) throw InputError("no oracle on a relations-mode presentation");
  return oracle_;
}

void DLatticePresentation::check_term(const LatticeTerm& t) const {
  for (const auto& name : t.names()) {
    if (std::find(generators_.begin(), generators_.end(), name) == generators_.end())
      throw InputError("unknown generator '" + name + "'");
  }
}

std::size_t DLatticePresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return i;
  throw InputError("unknown generator '" + name + "'");
}

LatticeTerm normalize(const DLatticePresentation& lattice, const LatticeTerm& t) {
  lattice.check_term(t);
  return t;
}

ModelSet ModelSet::of(const DLatticePresentation& lattice, const Caps& caps) {
  if (lattice.oracle_mode())
    throw InputError("model enumeration unavailable in oracle mode");
  const auto& gens = lattice.generators();
  if (gens.size() > caps.lattice_generators)
    throw CapacityError("lattice has " + std::to_string(gens.size()) +
                        " generators; cap is " + std::to_string(caps.lattice_generators));
  ModelSet ms;
  ms.generators_ = gens;

  // Compile each relation to clause masks once.
  std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> rels;
  rels.reserve(lattice.relations().size());
  for (const auto& [lhs, rhs] : lattice.relations())
    rels.emplace_back(ms.compile(lhs), ms.compile(rhs));

  auto eval_masks = [](const std::vector<std::uint64_t>& clauses, std::uint64_t m) {
    for (auto c : clauses)
      if ((m & c) == c) return true;
    return false;
  };

  const std::uint64_t total = std::uint64_t{1} << gens.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    bool ok = true;
    for (const auto& [l, r] : rels) {
      if (eval_masks(l, m) && !eval_masks(r, m)) {
        ok = false;
        break;
      }
    }
    if (ok) ms.models_.push_back(m);
  }
  return ms;
}

std::vector<std::uint64_t> ModelSet::compile(const LatticeTerm& t) const {
  std::vector<std::uint64_t> out;
  out.reserve(t.clauses().size());
  for (const auto& c : t.clauses()) {
    std::uint64_t mask = 0;
    for (const auto& g : c) {
      auto it = std::find(generators_.begin(), generators_.end(), g);
      if (it == generators_.end()) throw InputError("unknown generator '" + g + "'");
      mask |= std::uint64_t{1} << (it - generators_.begin());
    }
    out.push_back(mask);
  }
  return out;
}

bool ModelSet::eval(const LatticeTerm& t, std::uint64_t model) const {
  for (auto c : compile(t))
    if ((model & c) == c) return true;
  return false;
}

bool ModelSet::leq(const LatticeTerm& lhs, const LatticeTerm& rhs) const {
  auto l = compile(lhs), r = compile(rhs);
  auto eval_masks = [](const std::vector<std::uint64_t>& clauses, std::uint64_t m) {
    for (auto c : clauses)
      if ((m & c) == c) return true;
    return false;
  };
  for (auto m : models_)
    if (eval_masks(l, m) && !eval_masks(r, m)) return false;
  return true;
}

bool entails(const DLatticePresentation& lattice, const LatticeTerm& lhs,
             const LatticeTerm& rhs, const Caps& caps) {
  lattice.check_term(lhs);
  lattice.check_term(rhs);
  if (lattice.oracle_mode()) return lattice.oracle()(lhs, rhs);
  return ModelSet::of(lattice, caps).leq(lhs, rhs);
}

bool lattice_eq(const DLatticePresentation& lattice, const LatticeTerm& a,
                const LatticeTerm& b, const Caps& caps) {
  if (lattice.oracle_mode())
    return entails(lattice, a, b, caps) && entails(lattice, b, a, caps);
  lattice.check_term(a);
  lattice.check_term(b);
  auto ms = ModelSet::of(lattice, caps);
  return ms.leq(a, b) && ms.leq(b, a);
}

LatticeTerm term_meet(const DLatticePresentation& lattice, const LatticeTerm& a,
                      const LatticeTerm& b) {
  lattice.check_term(a);
  lattice.check_term(b);
  return a.meet(b);
}

LatticeTerm term_join(const DLatticePresentation& lattice, const LatticeTerm& a,
                      const LatticeTerm& b) {
  lattice.check_term(a);
  lattice.check_term(b);
  return a.join(b);
}

std::vector<LatticePoint> points(const DLatticePresentation& lattice, const Caps& caps) {
  auto ms = ModelSet::of(lattice, caps);
  const auto& gens = lattice.generators();
  std::vector<LatticePoint> pts;
  pts.reserve(ms.model_count());
  for (auto m : ms.models()) {
    LatticePoint p;
    p.generators = gens;
    p.values.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) p.values[i] = (m >> i) & 1;
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.values < b.values; });
  return pts;
}

namespace {

// Enumerates up-closed subsets of the poset given by leq (leq[i][j] means
// i ≤ j), as bitmasks.  Output-linear DFS over points in a topological
// order (minimal elements first).
void enumerate_upsets(const std::vector<std::vector<bool>>& leq,
                      std::vector<std::uint64_t>& out, std::size_t limit) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t below_a = 0, below_b = 0;
    for (std::size_t k = 0; k < n; ++k) {
      below_a += leq[k][a];
      below_b += leq[k][b];
    }
    return below_a != below_b ? below_a < below_b : a < b;
  });
  std::vector<char> chosen(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t step) {
    if (out.size() > limit) throw CapacityError("up-set enumeration exceeded cap");
    if (step == n) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (chosen[i]) mask |= std::uint64_t{1} << i;
      out.push_back(mask);
      return;
    }
    std::size_t p = order[step];
    bool forced = false;  // some already-chosen point lies below p
    for (std::size_t s = 0; s < step && !forced; ++s) {
      std::size_t q = order[s];
      if (chosen[q] && leq[q][p]) forced = true;
    }
    chosen[p] = 1;
    rec(step + 1);
    if (!forced) {
      chosen[p] = 0;
      rec(step + 1);
      chosen[p] = 1;
    }
    chosen[p] = 0;
  };
  rec(0);
}

}  // namespace

bool birkhoff_roundtrip(const DLatticePresentation& lattice, const Caps& caps) {
  auto pts = points(lattice, caps);
  const std::size_t n = pts.size();
  if (n == 0) {
    // Inconsistent relations: the presented lattice is a single point and
    // evaluation onto the (empty-poset) up-set lattice is trivially an
    // isomorphism.  Sanity-check that entailment indeed collapses.
    return entails(lattice, LatticeTerm::top(), LatticeTerm::bottom(), caps);
  }
  if (n > 62) throw CapacityError("too many points for the roundtrip check");

  // Pointwise order on models.
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t g = 0; g < pts[i].values.size() && le; ++g)
        if (pts[i].values[g] && !pts[j].values[g]) le = false;
      leq[i][j] = le;
    }

  std::vector<std::uint64_t> upsets;
  enumerate_upsets(leq, upsets, 200000);

  const auto& gens = lattice.generators();
  auto image_of = [&](const LatticeTerm& t) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool v = t.eval([&](const std::string& g) { return pts[i].value(g); });
      if (v) mask |= std::uint64_t{1} << i;
    }
    return mask;
  };
  auto upclosed = [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][j] && !((mask >> j) & 1)) return false;
    }
    return true;
  };

  // Every up-set must be realized by its canonical term, with exactly that
  // point set as image.
  std::vector<LatticeTerm> terms;
  terms.reserve(upsets.size());
  for (auto S : upsets) {
    std::vector<LatticeTerm::Clause> clauses;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((S >> i) & 1)) continue;
      LatticeTerm::Clause c;
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (pts[i].values[g]) c.push_back(gens[g]);
      clauses.push_back(std::move(c));
    }
    LatticeTerm t = LatticeTerm::join_of(std::move(clauses));
    if (!upclosed(image_of(t))) return false;
    if (image_of(t) != S) return false;
    terms.push_back(std::move(t));
  }

  // Evaluation must be an order-isomorphism onto the up-set lattice.
  auto ms = ModelSet::of(lattice, caps);
  for (std::size_t a = 0; a < upsets.size(); ++a)
    for (std::size_t b = 0; b < upsets.size(); ++b) {
      bool sub = (upsets[a] & ~upsets[b]) == 0;
      if (ms.leq(terms[a], terms[b]) != sub) return false;
    }
  return true;
}

bool frame_leq(const DLatticePresentation& lattice, const FrameElement& a,
               const FrameElement& b, const Caps& caps) {
  LatticeTerm rhs = LatticeTerm::bottom();
  for (const auto& t : b) rhs = rhs.join(t);
  lattice.check_term(rhs);
  for (const auto& t : a)
    if (!entails(lattice, t, rhs, caps)) return false;
  return true;
}

FrameElement frame_meet(const FrameElement& a, const FrameElement& b) {
  FrameElement out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x.meet(y));
  return out;
}

FrameElement frame_join(const FrameElement& a, const FrameElement& b) {
  FrameElement out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<LatticeTerm> term_universe(const std::vector<std::string>& generators,
                                       const Caps& caps) {
  const std::size_t n = generators.size();
  if (n > caps.universe_generators)
    throw CapacityError("normal-form universe capped at " +
                        std::to_string(caps.universe_generators) + " generators");
  const std::size_t m = std::size_t{1} << n;

  auto subset_of = [](std::size_t a, std::size_t b) { return (a & ~b) == 0; };

  // DFS over antichains of subsets of the generator set.
  std::vector<LatticeTerm> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    {
      std::vector<LatticeTerm::Clause> clauses;
      for (auto s : current) {
        LatticeTerm::Clause c;
        for (std::size_t g = 0; g < n; ++g)
          if ((s >> g) & 1) c.push_back(generators[g]);
        clauses.push_back(std::move(c));
      }
      out.push_back(LatticeTerm::join_of(std::move(clauses)));
    }
    for (std::size_t s = from; s < m; ++s) {
      bool comparable = false;
      for (auto t : current)
        if (subset_of(t, s) || subset_of(s, t)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      current.push_back(s);
      rec(s + 1);
      current.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pointfree
