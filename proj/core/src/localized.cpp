#include "pointfree/localized.hpp"

#include <bit>
#include <map>
#include <utility>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

/** Masks grouped by complex degree, ascending within a degree. */
struct SubsetLayout {
  int lo = 0;
  int hi = 0;
  std::vector<std::vector<unsigned>> masks;      // per degree, from lo
  std::map<unsigned, std::size_t> position;      // mask -> index within its degree

  const std::vector<unsigned>& at_degree(int n) const {
    return masks[static_cast<std::size_t>(n - lo)];
  }
};

int subset_degree(CoveringModel model, unsigned mask) {
  int pc = std::popcount(mask);
  return model == CoveringModel::cech ? -(pc - 1) : -pc;
}

SubsetLayout layout_for(const CoveringComplex& cov) {
  unsigned n = static_cast<unsigned>(cov.gens.size());
  SubsetLayout out;
  out.hi = 0;
  out.lo = cov.model == CoveringModel::cech ? -(static_cast<int>(n) - 1) : -static_cast<int>(n);
  out.masks.resize(static_cast<std::size_t>(out.hi - out.lo + 1));
  unsigned first = cov.model == CoveringModel::cech ? 1 : 0;
  for (unsigned mask = first; mask < (1u << n); ++mask) {
    int d = subset_degree(cov.model, mask);
    auto& bucket = out.masks[static_cast<std::size_t>(d - out.lo)];
    out.position.emplace(mask, bucket.size());
    bucket.push_back(mask);
  }
  return out;
}

/** (-1)^{#elements of S below i}. */
bool inclusion_negative(unsigned mask, unsigned i) {
  return std::popcount(mask & ((1u << i) - 1)) % 2 != 0;
}

/** Assembles the complex with the inclusion S → S ∪ {i} weighted by
 * weight(i). */
ChainComplex assemble(const CoveringComplex& cov, const RingPtr& ring,
                      const std::vector<Value>& weights) {
  SubsetLayout layout = layout_for(cov);
  unsigned n = static_cast<unsigned>(cov.gens.size());
  std::vector<std::size_t> ranks;
  for (int d = layout.lo; d <= layout.hi; ++d) ranks.push_back(layout.at_degree(d).size());

  std::map<int, Matrix> diffs;
  for (int d = layout.lo + 1; d <= layout.hi; ++d) {
    const auto& sources = layout.at_degree(d);
    const auto& targets = layout.at_degree(d - 1);
    Matrix m = Matrix::zero(ring, targets.size(), sources.size());
    for (std::size_t col = 0; col < sources.size(); ++col) {
      unsigned S = sources[col];
      for (unsigned i = 0; i < n; ++i) {
        if (S & (1u << i)) continue;
        unsigned T = S | (1u << i);
        std::size_t row = layout.position.at(T);
        m.at(row, col) =
            inclusion_negative(S, i) ? ring->neg(weights[i]) : weights[i];
      }
    }
    diffs.emplace(d, std::move(m));
  }
  return make_complex(ring, layout.lo, layout.hi, std::move(ranks), std::move(diffs));
}

}  // namespace

CoveringComplex make_covering(RingPtr ring, std::vector<Value> gens, CoveringModel model,
                              const Caps& caps) {
  if (!ring) throw InputError("make_covering: missing ring");
  if (!ring->is_pid()) throw InputError("make_covering: the ring must be a PID");
  if (gens.empty()) throw InputError("make_covering: at least one element is required");
  if (gens.size() > caps.covering_elements) {
    throw CapacityError("make_covering: more than " +
                        std::to_string(caps.covering_elements) + " elements");
  }
  for (const auto& g : gens) {
    if (ring->is_zero(g)) throw InputError("make_covering: covering elements must be nonzero");
  }
  return CoveringComplex{std::move(ring), std::move(gens), model};
}

ChainComplex covering_stage(const CoveringComplex& cov, unsigned k) {
  if (k == 0) throw InputError("covering_stage: stages are numbered from 1");
  std::vector<Value> weights;
  weights.reserve(cov.gens.size());
  for (const auto& g : cov.gens) weights.push_back(cov.ring->pow(g, k));
  return assemble(cov, cov.ring, weights);
}

ChainMap covering_transition(const CoveringComplex& cov, unsigned k) {
  ChainComplex from = covering_stage(cov, k);
  ChainComplex to = covering_stage(cov, k + 1);
  SubsetLayout layout = layout_for(cov);
  unsigned n = static_cast<unsigned>(cov.gens.size());
  std::map<int, Matrix> components;
  for (int d = layout.lo; d <= layout.hi; ++d) {
    const auto& masks = layout.at_degree(d);
    Matrix m = Matrix::zero(cov.ring, masks.size(), masks.size());
    for (std::size_t idx = 0; idx < masks.size(); ++idx) {
      Value prod = cov.ring->one();
      for (unsigned i = 0; i < n; ++i) {
        if (masks[idx] & (1u << i)) prod = cov.ring->mul(prod, cov.gens[i]);
      }
      m.at(idx, idx) = prod;
    }
    components.emplace(d, std::move(m));
  }
  return make_chain_map(std::move(from), std::move(to), std::move(components));
}

RingPtr covering_top_ring(const CoveringComplex& cov) {
  Value prod = cov.ring->one();
  for (const auto& g : cov.gens) prod = cov.ring->mul(prod, g);
  return localize(cov.ring, prod).ring;
}

ChainComplex covering_over_top(const CoveringComplex& cov) {
  RingPtr top = covering_top_ring(cov);
  std::vector<Value> weights(cov.gens.size(), top->one());
  return assemble(cov, top, weights);
}

bool covering_is_torsion(const CoveringComplex& cov, unsigned stages) {
  for (unsigned k = 1; k <= stages; ++k) {
    if (!is_I_torsion(covering_stage(cov, k), cov.gens)) return false;
  }
  return true;
}

bool covering_invertible(const CoveringComplex& cov) {
  RingPtr top = covering_top_ring(cov);
  ChainComplex collapsed = covering_over_top(cov);
  for (const auto& g : cov.gens) {
    auto image = cov.ring->coerce_into(g, *top);
    if (!image) throw Error("covering_invertible: missing localization map");
    if (!is_f_invertible(collapsed, *image)) return false;
  }
  return true;
}

std::string CokernelPower::str() const {
  if (copies == 0) return "0";
  std::string body = "R[1/" + ring->str(g) + "]/R";
  if (copies == 1) return body;
  return "(" + body + ")^" + std::to_string(copies);
}

ModulePresentation cokernel_stage(const CokernelPower& c, unsigned k) {
  if (k == 0) throw InputError("cokernel_stage: stages are numbered from 1");
  ModulePresentation out{c.ring, 0, {}};
  if (c.copies == 0) return out;
  Value gk = c.ring->canonical_associate(c.ring->pow(c.g, k));
  if (!c.ring->is_unit(gk)) out.divisors.assign(c.copies, gk);
  return out;
}

LocalCohomology local_cohomology(const RingPtr& ring, const std::vector<Value>& ideal_gens,
                                 const ModulePresentation& m) {
  if (!ring) throw InputError("local_cohomology: missing ring");
  if (!ring->is_pid() || !ring->is_domain()) {
    throw InputError("local_cohomology: the ring must be a PID domain");
  }
  if (!m.ring || !m.ring->equals(*ring)) {
    throw InputError("local_cohomology: module and ideal live in different rings");
  }
  Value g = ring->zero();
  for (const auto& x : ideal_gens) g = ring->gcd(g, x);

  LocalCohomology out{ring, g, ModulePresentation{ring, 0, {}}, CokernelPower{ring, g, 0}};
  if (ring->is_zero(g)) {
    out.h0 = m;  // the zero ideal fixes everything
    return out;
  }
  if (ring->is_unit(g)) return out;  // the unit ideal kills everything

  for (const auto& d : m.divisors) {
    // The part of d supported on the primes of g: divide away the g-free
    // factor.
    Value w = d;
    while (true) {
      Value h = ring->gcd(w, g);
      if (ring->is_unit(h)) break;
      w = *ring->div_exact(w, h);
    }
    Value gpart = ring->canonical_associate(*ring->div_exact(d, w));
    if (!ring->is_unit(gpart)) out.h0.divisors.push_back(gpart);
  }
  out.h1.copies = m.free_rank;
  return out;
}

bool cohomology_isomorphic(const LocalCohomology& a, const LocalCohomology& b) {
  if (!a.ring || !b.ring || !a.ring->equals(*b.ring)) {
    throw InputError("cohomology_isomorphic: values live over different rings");
  }
  if (!modules_isomorphic(a.h0, b.h0)) return false;
  if (a.h1.copies != b.h1.copies) return false;
  if (a.h1.copies == 0) return true;
  RingPtr la = localize(a.ring, a.g).ring;
  RingPtr lb = localize(b.ring, b.g).ring;
  return la->equals(*lb);
}

}  // namespace pointfree
