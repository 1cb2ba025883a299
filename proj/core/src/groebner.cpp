#include "pointfree/groebner.hpp"

#include <algorithm>
#include <deque>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = a.exps[i] - b.exps[i];
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

const PolyTerm& leading_term(const Poly& p, MonomialOrder order) {
  const PolyTerm* best = &p.front();
  for (const auto& t : p)
    if (mono_greater(t.mono, best->mono, order)) best = &t;
  return *best;
}

}  // namespace

MonomialOrder monomial_order_from_string(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::grevlex;
  if (s == "lex") return MonomialOrder::lex;
  throw InputError("unknown monomial order: " + s);
}

bool mono_greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::lex) return a.exps > b.exps;
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  // graded reverse lex: compare from the last variable; smaller exponent
  // there means the larger monomial
  for (std::size_t i = a.exps.size(); i-- > 0;)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  return false;
}

namespace {

// One reduction pass state shared by normal_form and Buchberger.
struct GB {
  const Ring& R;
  MonomialOrder ord;

  Value reduce(Value f, const std::vector<Value>& gens) const {
    Value remainder = R.zero();
    while (!R.is_zero(f)) {
      const Poly& fp = R.as_poly(f);
      PolyTerm lt = leading_term(fp, ord);
      bool reduced = false;
      for (const auto& g : gens) {
        if (R.is_zero(g)) continue;
        const Poly& gp = R.as_poly(g);
        PolyTerm lg = leading_term(gp, ord);
        if (!mono_divides(lg.mono, lt.mono)) continue;
        Poly factor{{mono_div(lt.mono, lg.mono),
                     R.coeff_mul(lt.coeff, R.coeff_inv(lg.coeff))}};
        f = R.sub(f, R.mul(Value{factor}, g));
        reduced = true;
        break;
      }
      if (!reduced) {
        Poly lead{{lt.mono, lt.coeff}};
        remainder = R.add(remainder, Value{lead});
        f = R.sub(f, Value{lead});
      }
    }
    return remainder;
  }

  Value spoly(const Value& f, const Value& g) const {
    const Poly& fp = R.as_poly(f);
    const Poly& gp = R.as_poly(g);
    PolyTerm lf = leading_term(fp, ord);
    PolyTerm lg = leading_term(gp, ord);
    Monomial l = mono_lcm(lf.mono, lg.mono);
    Poly mf{{mono_div(l, lf.mono), R.coeff_inv(lf.coeff)}};
    Poly mg{{mono_div(l, lg.mono), R.coeff_inv(lg.coeff)}};
    return R.sub(R.mul(Value{mf}, f), R.mul(Value{mg}, g));
  }
};

}  // namespace

Value normal_form(const RingPtr& ring, const Value& f, const std::vector<Value>& basis,
                  MonomialOrder order) {
  if (ring->kind() != RingKind::polynomial)
    throw InputError("normal form requires a polynomial ring");
  return GB{*ring, order}.reduce(f, basis);
}

std::vector<Value> groebner_basis(const RingPtr& ring, const std::vector<Value>& gens,
                                  MonomialOrder order) {
  if (ring->kind() != RingKind::polynomial)
    throw InputError("Groebner bases require a polynomial ring");
  GB gb{*ring, order};
  const Ring& R = *ring;

  std::vector<Value> basis;
  for (const auto& g : gens)
    if (!R.is_zero(g)) basis.push_back(g);

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  std::size_t steps = 0;
  while (!pairs.empty()) {
    if (++steps > 200000) throw CapacityError("Groebner basis computation too large");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    PolyTerm li = leading_term(R.as_poly(basis[i]), order);
    PolyTerm lj = leading_term(R.as_poly(basis[j]), order);
    if (mono_coprime(li.mono, lj.mono)) continue;  // Buchberger's first criterion
    Value rem = gb.reduce(gb.spoly(basis[i], basis[j]), basis);
    if (R.is_zero(rem)) continue;
    std::size_t k = basis.size();
    basis.push_back(rem);
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }

  // minimalize: drop generators whose leading monomial is divisible by
  // another's
  std::vector<Value> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    PolyTerm li = leading_term(R.as_poly(basis[i]), order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      PolyTerm lj = leading_term(R.as_poly(basis[j]), order);
      if (!mono_divides(lj.mono, li.mono)) continue;
      // on equal leading monomials keep the earlier one
      if (lj.mono == li.mono ? j < i : true) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // reduce tails against the rest and normalize monic
  std::vector<Value> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Value> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Value r = gb.reduce(minimal[i], others);
    if (R.is_zero(r)) continue;
    const Poly& rp = R.as_poly(r);
    PolyTerm lt = leading_term(rp, order);
    Poly scale{{Monomial{std::vector<unsigned>(R.variables().size(), 0)},
                R.coeff_inv(lt.coeff)}};
    reduced.push_back(R.mul(Value{scale}, r));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Value& a, const Value& b) {
    return mono_greater(leading_term(R.as_poly(a), order).mono,
                        leading_term(R.as_poly(b), order).mono, order);
  });
  return reduced;
}

}  // namespace pointfree
