#include "pointfree/zariski.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <utility>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

enum class PrimeStatus { certified, accepted, composite };

/** Trial division up to 10³ certifies every n ≤ 10⁶; larger survivors are
 * accepted without a certificate. */
PrimeStatus integer_prime_status(const Int& n_in) {
  Int n = n_in < 0 ? Int(-n_in) : n_in;
  if (n < 2) return PrimeStatus::composite;
  for (Int d = 2; d <= 1000 && d * d <= n; ++d) {
    if (n % d == 0) return n == d ? PrimeStatus::certified : PrimeStatus::composite;
  }
  return n <= 1000000 ? PrimeStatus::certified : PrimeStatus::accepted;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!a || !b || !a->equals(*b)) {
    throw InputError(std::string(where) + ": operands live in different rings");
  }
}

Poly poly_derivative(const Ring& ring, const Poly& p) {
  Poly out;
  for (const auto& t : p) {
    if (t.mono.exps.empty() || t.mono.exps[0] == 0) continue;
    PolyTerm d = t;
    d.coeff = ring.coeff_mul(t.coeff, Rat(t.mono.exps[0]));
    d.mono.exps[0] -= 1;
    out.push_back(d);
  }
  return out;
}

}  // namespace

RadicalIdeal radical_ideal(RingPtr ring, std::vector<Value> gens) {
  if (!ring) throw InputError("radical_ideal: missing ring");
  return RadicalIdeal{std::move(ring), std::move(gens)};
}

RadicalIdeal zar_support(const RingPtr& ring, const Value& f) {
  return radical_ideal(ring, {f});
}

RadicalIdeal zar_top(const RingPtr& ring) { return radical_ideal(ring, {ring->one()}); }

RadicalIdeal zar_bottom(const RingPtr& ring) { return radical_ideal(ring, {}); }

bool radical_contains(const RadicalIdeal& I, const Value& f) {
  return radical_member(I.ring, f, I.gens);
}

bool zar_leq(const RadicalIdeal& I, const RadicalIdeal& J) {
  require_same_ring(I.ring, J.ring, "zar_leq");
  for (const auto& g : I.gens) {
    if (!radical_member(J.ring, g, J.gens)) return false;
  }
  return true;
}

bool zar_eq(const RadicalIdeal& I, const RadicalIdeal& J) {
  return zar_leq(I, J) && zar_leq(J, I);
}

RadicalIdeal zar_join(const RadicalIdeal& I, const RadicalIdeal& J) {
  require_same_ring(I.ring, J.ring, "zar_join");
  std::vector<Value> gens = I.gens;
  gens.insert(gens.end(), J.gens.begin(), J.gens.end());
  return RadicalIdeal{I.ring, std::move(gens)};
}

RadicalIdeal zar_meet(const RadicalIdeal& I, const RadicalIdeal& J) {
  require_same_ring(I.ring, J.ring, "zar_meet");
  std::vector<Value> gens;
  gens.reserve(I.gens.size() * J.gens.size());
  for (const auto& a : I.gens) {
    for (const auto& b : J.gens) gens.push_back(I.ring->mul(a, b));
  }
  return RadicalIdeal{I.ring, std::move(gens)};
}

LatticeOpen zariski_open(RadicalIdeal I) {
  return LatticeOpen{OpenKind::zariski, std::move(I)};
}

LatticeOpen hochster_open(RadicalIdeal I) {
  return LatticeOpen{OpenKind::hochster, std::move(I)};
}

bool open_leq(const LatticeOpen& a, const LatticeOpen& b) {
  if (a.kind != b.kind) {
    throw InputError("open_leq: cannot compare elements of dual lattices");
  }
  return a.kind == OpenKind::zariski ? zar_leq(a.ideal, b.ideal)
                                     : zar_leq(b.ideal, a.ideal);
}

bool open_eq(const LatticeOpen& a, const LatticeOpen& b) {
  return open_leq(a, b) && open_leq(b, a);
}

LatticeOpen open_meet(const LatticeOpen& a, const LatticeOpen& b) {
  if (a.kind != b.kind) {
    throw InputError("open_meet: cannot combine elements of dual lattices");
  }
  RadicalIdeal ideal = a.kind == OpenKind::zariski ? zar_meet(a.ideal, b.ideal)
                                                   : zar_join(a.ideal, b.ideal);
  return LatticeOpen{a.kind, std::move(ideal)};
}

LatticeOpen open_join(const LatticeOpen& a, const LatticeOpen& b) {
  if (a.kind != b.kind) {
    throw InputError("open_join: cannot combine elements of dual lattices");
  }
  RadicalIdeal ideal = a.kind == OpenKind::zariski ? zar_join(a.ideal, b.ideal)
                                                   : zar_meet(a.ideal, b.ideal);
  return LatticeOpen{a.kind, std::move(ideal)};
}

AxiomReport verify_support_axioms(const SupportMap& sm, const std::vector<Value>& sample) {
  if (!sm.ring || !sm.d) throw InputError("verify_support_axioms: incomplete support datum");
  const Ring& R = *sm.ring;
  AxiomReport report;
  auto complain = [&report](const std::string& msg) {
    report.pass = false;
    report.violations.push_back(msg);
  };

  LatticeTerm d1 = sm.d(R.one());
  if (!lattice_eq(sm.lattice, d1, LatticeTerm::top())) {
    complain("d(1) = " + d1.str() + " is not the top element");
  }
  LatticeTerm d0 = sm.d(R.zero());
  if (!lattice_eq(sm.lattice, d0, LatticeTerm::bottom())) {
    complain("d(0) = " + d0.str() + " is not the bottom element");
  }

  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i; j < sample.size(); ++j) {
      const Value& f = sample[i];
      const Value& g = sample[j];
      LatticeTerm df = sm.d(f);
      LatticeTerm dg = sm.d(g);
      LatticeTerm dprod = sm.d(R.mul(f, g));
      LatticeTerm met = df.meet(dg);
      if (!lattice_eq(sm.lattice, dprod, met)) {
        complain("multiplicativity fails at f=" + R.str(f) + ", g=" + R.str(g) +
                 ": d(f*g) = " + dprod.str() + " but d(f) & d(g) = " + met.str());
      }
      LatticeTerm dsum = sm.d(R.add(f, g));
      LatticeTerm joined = df.join(dg);
      if (!entails(sm.lattice, dsum, joined)) {
        complain("subadditivity fails at f=" + R.str(f) + ", g=" + R.str(g) +
                 ": d(f+g) = " + dsum.str() + " is not below d(f) | d(g) = " + joined.str());
      }
    }
  }
  return report;
}

LatticeTerm universal_support_map(const SupportMap& sm, const RadicalIdeal& I) {
  require_same_ring(sm.ring, I.ring, "universal_support_map");
  LatticeTerm t = LatticeTerm::bottom();
  for (const auto& g : I.gens) t = t.join(sm.d(g));
  return t;
}

RadicalIdeal induced_map(const RingHom& hom, const RadicalIdeal& I) {
  require_same_ring(hom.source, I.ring, "induced_map");
  std::vector<Value> images;
  images.reserve(I.gens.size());
  for (const auto& g : I.gens) images.push_back(apply_hom(hom, g));
  return RadicalIdeal{hom.target, std::move(images)};
}

bool point_contains(const Value& p, const LatticeOpen& open) {
  const RingPtr& ring = open.ideal.ring;
  if (!ring) throw InputError("point_contains: missing ring");
  bool generic = ring->is_zero(p);
  if (!generic) {
    if (ring->is_unit(p)) {
      throw InputError("point_contains: a unit does not generate a prime ideal");
    }
    switch (ring->kind()) {
      case RingKind::integers: {
        if (integer_prime_status(std::get<Int>(p.data)) == PrimeStatus::composite) {
          throw InputError("point_contains: " + ring->str(p) +
                           " is composite, not a prime element");
        }
        break;
      }
      case RingKind::polynomial: {
        if (ring->variables().size() != 1) {
          throw InputError("point_contains: points are supported for ZZ and univariate "
                           "polynomial rings only");
        }
        const Poly& q = ring->as_poly(p);
        Value deriv = ring->from_poly(poly_derivative(*ring, q));
        Value g = ring->gcd(p, deriv);
        if (!ring->is_unit(g)) {
          throw InputError("point_contains: " + ring->str(p) +
                           " is not squarefree, hence not a prime element");
        }
        break;
      }
      default:
        throw InputError("point_contains: points are supported for ZZ and univariate "
                         "polynomial rings only");
    }
  }
  auto in_point = [&](const Value& f) {
    return generic ? ring->is_zero(f) : ring->divides(p, f);
  };
  if (open.kind == OpenKind::hochster) {
    for (const auto& g : open.ideal.gens) {
      if (!in_point(g)) return false;
    }
    return true;
  }
  for (const auto& g : open.ideal.gens) {
    if (!in_point(g)) return true;
  }
  return false;
}

std::vector<Value> enumerate_primes(const RingPtr& ring, const Int& bound) {
  if (!ring || ring->kind() != RingKind::integers) {
    throw InputError("enumerate_primes: only ZZ enumeration is supported");
  }
  if (bound > 1000000) {
    throw CapacityError("enumerate_primes: bound exceeds 10^6");
  }
  std::vector<Value> out;
  out.push_back(ring->zero());  // the generic point
  if (bound < 2) return out;
  std::size_t n = static_cast<std::size_t>(bound);
  std::vector<bool> composite(n + 1, false);
  for (std::size_t d = 2; d <= n; ++d) {
    if (composite[d]) continue;
    out.push_back(ring->from_int(Int(d)));
    for (std::size_t m = d * d; m <= n; m += d) composite[m] = true;
  }
  return out;
}

DLatticePresentation zariski_lattice(const RingPtr& ring, const std::vector<Value>& gens) {
  if (!ring) throw InputError("zariski_lattice: missing ring");
  auto table = std::make_shared<std::map<std::string, Value>>();
  std::vector<std::string> names;
  for (const auto& g : gens) {
    std::string name = "D(" + ring->str(g) + ")";
    if (table->emplace(name, g).second) names.push_back(name);
  }
  RingPtr R = ring;
  auto ideal_of = [R, table](const LatticeTerm& t) {
    std::vector<Value> clause_gens;
    for (const auto& clause : t.clauses()) {
      Value prod = R->one();
      for (const auto& name : clause) prod = R->mul(prod, table->at(name));
      clause_gens.push_back(prod);
    }
    return RadicalIdeal{R, std::move(clause_gens)};
  };
  auto oracle = [ideal_of](const LatticeTerm& lhs, const LatticeTerm& rhs) {
    return zar_leq(ideal_of(lhs), ideal_of(rhs));
  };
  return DLatticePresentation::with_oracle(std::move(names), std::move(oracle));
}

SupportMap powerset_support(const RingPtr& ring, const std::vector<Int>& primes) {
  if (!ring || ring->kind() != RingKind::integers) {
    throw InputError("powerset_support: the powerset support is defined over ZZ");
  }
  std::vector<std::string> names;
  std::vector<Value> prime_values;
  for (const auto& p : primes) {
    if (integer_prime_status(p) == PrimeStatus::composite || p < 2) {
      throw InputError("powerset_support: " + p.str() + " is not a prime");
    }
    std::string name = "a" + p.str();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw InputError("powerset_support: duplicate prime " + p.str());
    }
    names.push_back(name);
    prime_values.push_back(ring->from_int(p));
  }
  std::vector<DLatticePresentation::Relation> relations;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      relations.emplace_back(LatticeTerm::var(names[i]).meet(LatticeTerm::var(names[j])),
                             LatticeTerm::bottom());
    }
  }
  LatticeTerm all = LatticeTerm::bottom();
  for (const auto& n : names) all = all.join(LatticeTerm::var(n));
  relations.emplace_back(LatticeTerm::top(), all);

  DLatticePresentation lattice =
      DLatticePresentation::with_relations(names, std::move(relations));
  RingPtr R = ring;
  auto d = [R, prime_values, names](const Value& f) {
    LatticeTerm t = LatticeTerm::bottom();
    for (std::size_t k = 0; k < prime_values.size(); ++k) {
      if (!R->divides(prime_values[k], f)) t = t.join(LatticeTerm::var(names[k]));
    }
    return t;
  };
  return SupportMap{ring, std::move(lattice), std::move(d)};
}

SupportMap self_support(const RingPtr& ring, const std::vector<Value>& universe) {
  DLatticePresentation lattice = zariski_lattice(ring, universe);
  auto table = std::make_shared<std::map<std::string, std::string>>();
  for (const auto& u : universe) {
    std::string s = ring->str(u);
    table->emplace(s, "D(" + s + ")");
  }
  RingPtr R = ring;
  auto d = [R, table](const Value& f) {
    auto it = table->find(R->str(f));
    if (it != table->end()) return LatticeTerm::var(it->second);
    if (R->is_zero(f)) return LatticeTerm::bottom();
    if (R->is_unit(f)) return LatticeTerm::top();
    throw InputError("self_support: element " + R->str(f) +
                     " is outside the declared universe");
  };
  return SupportMap{ring, std::move(lattice), std::move(d)};
}

}  // namespace pointfree
