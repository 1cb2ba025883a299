#include "pointfree/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

RingPtr base_of(const RingPtr& r) {
  return r->kind() == RingKind::localization ? r->localization_base() : r;
}

/** The inverted element as a base-ring value (one() for a plain ring). */
Value inverted_of(const RingPtr& r) {
  return r->kind() == RingKind::localization ? r->inverted_element() : r->one();
}

Value numer_of(const RingPtr& r, const Value& v) {
  return r->kind() == RingKind::localization ? r->loc_numerator(v) : v;
}

unsigned denom_pow_of(const RingPtr& r, const Value& v) {
  return r->kind() == RingKind::localization ? r->loc_denominator_pow(v) : 0;
}

Value coerce_or_throw(const RingPtr& from, const Value& v, const RingPtr& to,
                      const char* where) {
  auto out = from->coerce_into(v, *to);
  if (!out) {
    throw InputError(std::string(where) + ": no canonical map from " + from->name() +
                     " to " + to->name());
  }
  return *out;
}

std::string ideal_str(const RadicalIdeal& I) {
  if (I.gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < I.gens.size(); ++k) {
    if (k) out += ", ";
    out += I.ring->str(I.gens[k]);
  }
  return out + ")";
}

/** Extends h : R[1/f] → T to R[1/(f·extra)] → T[1/h(extra)], keeping the
 * same generator images. */
RingHom extend_hom(const RingHom& h, const Value& extra) {
  RingPtr sbase = base_of(h.source);
  Value new_src_f = sbase->mul(inverted_of(h.source), extra);
  RingPtr source2 = localize(sbase, new_src_f).ring;

  Value img = apply_hom(h, coerce_or_throw(sbase, extra, h.source, "extend_hom"));
  RingPtr tbase = base_of(h.target);
  Value tnum = numer_of(h.target, img);
  if (tbase->is_zero(tnum)) {
    throw InputError("extend_hom: the transition map kills an overlap element");
  }
  RingPtr target2 = localize(tbase, tbase->mul(inverted_of(h.target), tnum)).ring;

  std::map<std::string, Value> images;
  for (const auto& [name, value] : h.images) {
    images.emplace(name, coerce_or_throw(h.target, value, target2, "extend_hom"));
  }
  return make_hom(source2, target2, std::move(images));
}

/** Compares two elements living in (possibly different) localizations of
 * one base ring, inside the common finer localization. */
bool agree_in_common(const RingPtr& ra, const Value& a, const RingPtr& rb, const Value& b) {
  RingPtr base = base_of(ra);
  RingPtr common = localize(base, base->mul(inverted_of(ra), inverted_of(rb))).ring;
  Value ca = coerce_or_throw(ra, a, common, "agree_in_common");
  Value cb = coerce_or_throw(rb, b, common, "agree_in_common");
  return common->is_zero(common->sub(ca, cb));
}

const std::vector<std::string>& base_vars(const RingPtr& piece) {
  static const std::vector<std::string> none{};
  RingPtr b = base_of(piece);
  return b->kind() == RingKind::polynomial ? b->variables() : none;
}

}  // namespace

Scheme glue(const SchemeDatum& datum) {
  if (datum.pieces.empty() || datum.pieces.size() > 3) {
    throw InputError("glue: between 1 and 3 pieces are supported");
  }
  for (const auto& p : datum.pieces) {
    if (!p) throw InputError("glue: missing piece ring");
  }
  Scheme scheme{datum.pieces, {}};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& raw : datum.gluings) {
    if (raw.i >= scheme.pieces.size() || raw.j >= scheme.pieces.size() || raw.i == raw.j) {
      throw InputError("glue: bad piece indices in a gluing");
    }
    auto key = std::minmax(raw.i, raw.j);
    if (!seen.insert(key).second) {
      throw InputError("glue: duplicate gluing between the same pieces");
    }
    Gluing g;
    g.i = raw.i;
    g.j = raw.j;
    g.f_ij = raw.f_ij;
    g.f_ji = raw.f_ji;
    g.overlap_ij = localize(scheme.pieces[raw.i], raw.f_ij).ring;
    g.overlap_ji = localize(scheme.pieces[raw.j], raw.f_ji).ring;
    g.phi = make_hom(g.overlap_ij, g.overlap_ji, raw.phi_images);
    g.phi_inv = make_hom(g.overlap_ji, g.overlap_ij, raw.phi_inv_images);

    // The transitions must be mutually inverse on coordinates.
    RingPtr base_i = base_of(scheme.pieces[raw.i]);
    for (const auto& x : base_vars(scheme.pieces[raw.i])) {
      Value v = coerce_or_throw(base_i, base_i->var_value(x), g.overlap_ij, "glue");
      Value round = apply_hom(g.phi_inv, apply_hom(g.phi, v));
      if (!g.overlap_ij->is_zero(g.overlap_ij->sub(round, v))) {
        throw InputError("glue: the transition maps between pieces " +
                         std::to_string(raw.i) + " and " + std::to_string(raw.j) +
                         " are not mutually inverse at " + x);
      }
    }
    RingPtr base_j = base_of(scheme.pieces[raw.j]);
    for (const auto& x : base_vars(scheme.pieces[raw.j])) {
      Value v = coerce_or_throw(base_j, base_j->var_value(x), g.overlap_ji, "glue");
      Value round = apply_hom(g.phi, apply_hom(g.phi_inv, v));
      if (!g.overlap_ji->is_zero(g.overlap_ji->sub(round, v))) {
        throw InputError("glue: the transition maps between pieces " +
                         std::to_string(raw.i) + " and " + std::to_string(raw.j) +
                         " are not mutually inverse at " + x);
      }
    }
    scheme.gluings.push_back(std::move(g));
  }

  // Cocycle identity on every pairwise-glued triple: going a → b → c must
  // match going a → c directly, compared in a common localization.
  auto directed = [&scheme](std::size_t a, std::size_t b) -> const Gluing* {
    for (const auto& g : scheme.gluings) {
      if (g.i == a && g.j == b) return &g;
      if (g.i == b && g.j == a) return &g;
    }
    return nullptr;
  };
  auto hom_of = [](const Gluing& g, std::size_t from) {
    return g.i == from ? g.phi : g.phi_inv;
  };
  auto overlap_elem = [](const Gluing& g, std::size_t from) {
    return g.i == from ? g.f_ij : g.f_ji;
  };
  std::size_t n = scheme.pieces.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        const Gluing* gab = directed(a, b);
        const Gluing* gbc = directed(b, c);
        const Gluing* gac = directed(a, c);
        if (!gab || !gbc || !gac) continue;
        const auto& vars = base_vars(scheme.pieces[a]);
        if (vars.empty()) continue;
        RingPtr base_a = base_of(scheme.pieces[a]);
        Value extra_a = numer_of(scheme.pieces[a], overlap_elem(*gac, a));
        RingHom h1 = extend_hom(hom_of(*gab, a), extra_a);
        RingHom h2 = extend_hom(hom_of(*gbc, b), inverted_of(h1.target));
        RingHom h3 = extend_hom(hom_of(*gac, a),
                                numer_of(scheme.pieces[a], overlap_elem(*gab, a)));
        for (const auto& x : vars) {
          Value vx = base_a->var_value(x);
          Value via_b = apply_hom(
              h2, coerce_or_throw(h1.target,
                                  apply_hom(h1, coerce_or_throw(base_a, vx, h1.source,
                                                                "glue")),
                                  h2.source, "glue"));
          Value direct = apply_hom(h3, coerce_or_throw(base_a, vx, h3.source, "glue"));
          if (!agree_in_common(h2.target, via_b, h3.target, direct)) {
            throw InputError("glue: cocycle identity fails on pieces " +
                             std::to_string(a) + ", " + std::to_string(b) + ", " +
                             std::to_string(c) + " at " + x);
          }
        }
      }
    }
  }
  return scheme;
}

namespace {

std::vector<Value> coerce_gens(const RadicalIdeal& I, const RingPtr& target,
                               const char* where) {
  std::vector<Value> out;
  out.reserve(I.gens.size());
  for (const auto& g : I.gens) out.push_back(coerce_or_throw(I.ring, g, target, where));
  return out;
}

}  // namespace

GlobalOpen make_global_open(const Scheme& scheme, std::vector<RadicalIdeal> parts) {
  if (parts.size() != scheme.pieces.size()) {
    throw InputError("make_global_open: one radical ideal per piece is required");
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!parts[p].ring || !parts[p].ring->equals(*scheme.pieces[p])) {
      throw InputError("make_global_open: part " + std::to_string(p) +
                       " lives in the wrong ring");
    }
  }
  for (const auto& g : scheme.gluings) {
    RadicalIdeal side_i{g.overlap_ij, coerce_gens(parts[g.i], g.overlap_ij,
                                                  "make_global_open")};
    RadicalIdeal side_j{g.overlap_ji, coerce_gens(parts[g.j], g.overlap_ji,
                                                  "make_global_open")};
    RadicalIdeal moved = induced_map(g.phi, side_i);
    if (!zar_eq(moved, side_j)) {
      throw InputError("make_global_open: the parts disagree on the overlap of pieces " +
                       std::to_string(g.i) + " and " + std::to_string(g.j));
    }
  }
  return GlobalOpen{std::move(parts)};
}

bool global_entails(const Scheme& scheme, const GlobalOpen& a, const GlobalOpen& b) {
  if (a.parts.size() != scheme.pieces.size() || b.parts.size() != scheme.pieces.size()) {
    throw InputError("global_entails: opens do not match the scheme");
  }
  for (std::size_t p = 0; p < a.parts.size(); ++p) {
    if (!zar_leq(a.parts[p], b.parts[p])) return false;
  }
  return true;
}

GlobalOpen global_meet(const Scheme& scheme, const GlobalOpen& a, const GlobalOpen& b) {
  if (a.parts.size() != scheme.pieces.size() || b.parts.size() != scheme.pieces.size()) {
    throw InputError("global_meet: opens do not match the scheme");
  }
  GlobalOpen out;
  for (std::size_t p = 0; p < a.parts.size(); ++p) {
    out.parts.push_back(zar_meet(a.parts[p], b.parts[p]));
  }
  return out;
}

GlobalOpen global_join(const Scheme& scheme, const GlobalOpen& a, const GlobalOpen& b) {
  if (a.parts.size() != scheme.pieces.size() || b.parts.size() != scheme.pieces.size()) {
    throw InputError("global_join: opens do not match the scheme");
  }
  GlobalOpen out;
  for (std::size_t p = 0; p < a.parts.size(); ++p) {
    out.parts.push_back(zar_join(a.parts[p], b.parts[p]));
  }
  return out;
}

RingPtr structure_sheaf_value(const Scheme& scheme, std::size_t piece, const Value& f) {
  if (piece >= scheme.pieces.size()) throw InputError("structure_sheaf_value: no such piece");
  return localize(scheme.pieces[piece], f).ring;
}

RingHom restriction_map(const Scheme& scheme, std::size_t piece, const Value& from_f,
                        const Value& to_f) {
  if (piece >= scheme.pieces.size()) throw InputError("restriction_map: no such piece");
  const RingPtr& R = scheme.pieces[piece];
  if (!radical_member(R, to_f, {from_f})) {
    throw InputError("restriction_map: D(" + R->str(to_f) + ") is not contained in D(" +
                     R->str(from_f) + ")");
  }
  RingPtr source = localize(R, from_f).ring;
  RingPtr target = localize(R, to_f).ring;
  RingPtr base = base_of(R);
  std::map<std::string, Value> images;
  for (const auto& x : base_vars(R)) {
    images.emplace(x, coerce_or_throw(base, base->var_value(x), target, "restriction_map"));
  }
  return make_hom(std::move(source), std::move(target), std::move(images));
}

namespace {

bool connected_diagram(const Scheme& scheme) {
  std::vector<std::size_t> parent(scheme.pieces.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : scheme.gluings) parent[find(g.i)] = find(g.j);
  for (std::size_t p = 1; p < scheme.pieces.size(); ++p) {
    if (find(p) != find(0)) return false;
  }
  return true;
}

unsigned poly_degree(const RingPtr& ring, const Value& v) {
  const Poly& p = ring->as_poly(v);
  return p.empty() ? 0 : p[0].mono.exps[0];
}

Value field_coeff(const RingPtr& field, const RingPtr& ring, const Value& v, unsigned deg) {
  for (const auto& t : ring->as_poly(v)) {
    if (t.mono.exps[0] == deg) {
      auto out = field->from_rational(t.coeff);
      if (!out) throw Error("field_coeff: coefficient outside the field");
      return *out;
    }
  }
  return field->zero();
}

std::size_t sections_dimension(const Scheme& scheme, unsigned b) {
  const RingPtr& field = scheme.pieces[0]->coefficient_field();
  std::size_t per_piece = static_cast<std::size_t>(b) + 1;
  std::size_t unknowns = per_piece * scheme.pieces.size();

  // One block of rows per gluing: φ(p_i) - p_j = 0 inside the j-side
  // overlap, cleared of denominators and read off coefficient by
  // coefficient.
  std::vector<std::vector<Value>> rows;
  for (const auto& g : scheme.gluings) {
    const RingPtr& Ri = scheme.pieces[g.i];
    const RingPtr& Rj = scheme.pieces[g.j];
    Value ti = Ri->var_value(Ri->variables()[0]);
    Value tj = Rj->var_value(Rj->variables()[0]);

    std::vector<Value> nums(per_piece);
    std::vector<unsigned> pows(per_piece);
    unsigned max_pow = 0;
    for (unsigned k = 0; k <= b; ++k) {
      Value img = apply_hom(g.phi, coerce_or_throw(Ri, Ri->pow(ti, k), g.overlap_ij,
                                                   "global_sections"));
      nums[k] = numer_of(g.overlap_ji, img);
      pows[k] = denom_pow_of(g.overlap_ji, img);
      max_pow = std::max(max_pow, pows[k]);
    }
    std::vector<Value> lhs(per_piece), rhs(per_piece);
    unsigned max_deg = 0;
    for (unsigned k = 0; k <= b; ++k) {
      lhs[k] = Rj->mul(nums[k], Rj->pow(g.f_ji, max_pow - pows[k]));
      rhs[k] = Rj->mul(Rj->pow(tj, k), Rj->pow(g.f_ji, max_pow));
      max_deg = std::max({max_deg, poly_degree(Rj, lhs[k]), poly_degree(Rj, rhs[k])});
    }
    for (unsigned deg = 0; deg <= max_deg; ++deg) {
      std::vector<Value> row(unknowns, field->zero());
      for (unsigned k = 0; k <= b; ++k) {
        row[g.i * per_piece + k] = field_coeff(field, Rj, lhs[k], deg);
        row[g.j * per_piece + k] = field->neg(field_coeff(field, Rj, rhs[k], deg));
      }
      rows.push_back(std::move(row));
    }
  }

  Matrix m = Matrix::zero(field, rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) m.at(r, c) = rows[r][c];
  }
  std::size_t rank = smith_normal_form(m).divisors.size();
  return unknowns - rank;
}

}  // namespace

GlobalSections global_sections(const Scheme& scheme, unsigned bound) {
  bool all_int = true;
  bool all_poly = true;
  for (const auto& p : scheme.pieces) {
    RingPtr b = base_of(p);
    if (b->kind() != RingKind::integers) all_int = false;
    if (p->kind() != RingKind::polynomial || p->variables().size() != 1) all_poly = false;
  }
  if (all_poly) {
    const RingPtr& field = scheme.pieces[0]->coefficient_field();
    for (const auto& p : scheme.pieces) {
      if (!p->coefficient_field()->equals(*field)) all_poly = false;
    }
  }

  if (all_int) {
    if (scheme.pieces.size() > 1 && !connected_diagram(scheme)) {
      throw InputError("global_sections: the diagram is disconnected");
    }
    RingPtr zz = base_of(scheme.pieces[0]);
    Value acc = zz->zero();
    for (const auto& p : scheme.pieces) acc = zz->gcd(acc, inverted_of(p));
    GlobalSections out;
    out.ring = localize(zz, acc).ring;
    return out;
  }

  if (all_poly) {
    if (scheme.gluings.empty()) {
      if (scheme.pieces.size() == 1) {
        GlobalSections out;
        out.ring = scheme.pieces[0];
        return out;
      }
      throw InputError("global_sections: the diagram is disconnected");
    }
    if (bound < 1) throw InputError("global_sections: the degree bound must be positive");
    std::size_t below = sections_dimension(scheme, bound - 1);
    std::size_t at = sections_dimension(scheme, bound);
    std::size_t above = sections_dimension(scheme, bound + 1);
    GlobalSections out;
    out.dimension = at;
    out.stable = (above - at) == (at - below);
    return out;
  }

  throw InputError("global_sections: supported for ZZ-localization pieces and univariate "
                   "polynomial pieces only");
}

SheafCheckReport sheaf_condition_check(const RingPtr& ring, const Value& f,
                                       const std::vector<Value>& cover, unsigned exponent) {
  if (!ring || !ring->is_pid() || !ring->is_domain()) {
    throw InputError("sheaf_condition_check: the ring must be a PID domain");
  }
  if (cover.empty()) throw InputError("sheaf_condition_check: empty cover");
  if (ring->is_zero(f)) throw InputError("sheaf_condition_check: the empty open is excluded");
  for (const auto& g : cover) {
    if (ring->is_zero(g)) throw InputError("sheaf_condition_check: zero cover element");
  }

  SheafCheckReport report;
  report.covers = radical_member(ring, f, cover);
  for (const auto& g : cover) {
    if (!radical_member(ring, g, {f})) report.covers = false;
  }
  if (!report.covers) return report;

  // Compatible families (n_1/g_1^N, …): kernel of the pairwise equations
  // n_l g_m^N = n_m g_l^N over R.  Over a domain two Laurent sections are
  // equal on an overlap iff these cleared forms match, so the kernel is
  // exactly the compatible-family lattice.
  std::size_t m = cover.size();
  std::vector<Value> powers(m);
  for (std::size_t l = 0; l < m; ++l) powers[l] = ring->pow(cover[l], exponent);
  std::size_t pairs = m * (m - 1) / 2;
  Matrix eq = Matrix::zero(ring, pairs, m);
  std::size_t row = 0;
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t k = l + 1; k < m; ++k) {
      eq.at(row, l) = powers[k];
      eq.at(row, k) = ring->neg(powers[l]);
      ++row;
    }
  }
  SnfResult snf = smith_normal_form(eq);
  std::size_t rank = snf.divisors.size();

  report.descends = true;
  for (std::size_t basis = rank; basis < m && report.descends; ++basis) {
    // Try to realize the family as n / f^k; scaling by f preserves both
    // existence and equality of the quotients, so the first exponent at
    // which all divisions succeed settles the question.
    bool lifted = false;
    Value fk = ring->one();
    for (unsigned k = 0; k <= exponent + 64; ++k, fk = ring->mul(fk, f)) {
      std::optional<Value> common;
      bool all = true;
      bool equal = true;
      for (std::size_t l = 0; l < m; ++l) {
        Value numer = ring->mul(snf.V.at(l, basis), fk);
        auto q = ring->div_exact(numer, powers[l]);
        if (!q) {
          all = false;
          break;
        }
        if (!common) {
          common = *q;
        } else if (!ring->is_zero(ring->sub(*common, *q))) {
          equal = false;
          break;
        }
      }
      if (all && !equal) break;  // stays unequal under further scaling
      if (all && equal) {
        lifted = true;
        break;
      }
    }
    if (!lifted) report.descends = false;
  }
  return report;
}

RingPtr domain_presheaf_value(const RingPtr& ring, const std::vector<Value>& gens) {
  if (!ring) throw InputError("domain_presheaf_value: missing ring");
  if (ring->kind() == RingKind::integers) {
    Value g = ring->zero();
    for (const auto& x : gens) g = ring->gcd(g, x);
    if (ring->is_zero(g)) return ring;
    if (ring->is_unit(g)) {
      throw InputError("domain_presheaf_value: the unit ideal cuts out the empty "
                       "subscheme (zero ring)");
    }
    return Ring::integers_mod(std::get<Int>(g.data));
  }
  if (ring->kind() == RingKind::integers_mod) {
    RingPtr zz = Ring::integers();
    Value g = zz->from_int(ring->modulus());
    for (const auto& x : gens) g = zz->gcd(g, Value{std::get<Int>(x.data)});
    if (zz->is_unit(g)) {
      throw InputError("domain_presheaf_value: the unit ideal cuts out the empty "
                       "subscheme (zero ring)");
    }
    return Ring::integers_mod(std::get<Int>(g.data));
  }
  throw InputError("domain_presheaf_value: defined over ZZ and ZZ/n only");
}

RingHom domain_presheaf_restriction(const RingPtr& ring, const std::vector<Value>& from_gens,
                                    const std::vector<Value>& to_gens) {
  RingPtr from = domain_presheaf_value(ring, from_gens);
  RingPtr to = domain_presheaf_value(ring, to_gens);
  Int g_from = from->kind() == RingKind::integers ? Int(0) : from->modulus();
  Int g_to = to->kind() == RingKind::integers ? Int(0) : to->modulus();
  bool ok = g_to == 0 ? g_from == 0 : g_from % g_to == 0;
  if (!ok) {
    throw InputError("domain_presheaf_restriction: the target subscheme is not contained "
                     "in the source");
  }
  return make_hom(std::move(from), std::move(to), {});
}

ReconstructionReport reconstruction_check(const Scheme& scheme,
                                          const std::vector<std::vector<RadicalIdeal>>& samples) {
  if (samples.size() != scheme.pieces.size()) {
    throw InputError("reconstruction_check: one sample list per piece is required");
  }
  ReconstructionReport report;
  auto fail = [&report](std::string msg) {
    report.pass = false;
    report.failures.push_back(std::move(msg));
  };

  for (std::size_t p = 0; p < samples.size(); ++p) {
    const RingPtr& R = scheme.pieces[p];
    std::vector<LatticeOpen> opens;
    for (const auto& I : samples[p]) {
      if (!I.ring || !I.ring->equals(*R)) {
        throw InputError("reconstruction_check: sample ideal in the wrong ring for piece " +
                         std::to_string(p));
      }
      opens.push_back(loc_invariant(koszul(R, I.gens)));
    }
    for (std::size_t a = 0; a < samples[p].size(); ++a) {
      if (!zar_eq(opens[a].ideal, samples[p][a])) {
        fail("piece " + std::to_string(p) + ": the complex on " +
             ideal_str(samples[p][a]) + " has support " + ideal_str(opens[a].ideal));
      }
      for (std::size_t b = 0; b < samples[p].size(); ++b) {
        bool via_complexes = open_leq(opens[a], opens[b]);
        bool via_ideals = zar_leq(samples[p][b], samples[p][a]);
        if (via_complexes != via_ideals) {
          fail("piece " + std::to_string(p) + ": order mismatch between " +
               ideal_str(samples[p][a]) + " and " + ideal_str(samples[p][b]));
        }
      }
    }
  }

  auto overlap_commutes = [&](const RingPtr& near, const RingPtr& far, const RingHom& hom,
                              const RadicalIdeal& I) {
    std::vector<Value> local = coerce_gens(I, near, "reconstruction_check");
    RadicalIdeal support_near = supph(koszul(near, local));
    RadicalIdeal moved = induced_map(hom, support_near);
    std::vector<Value> pushed;
    pushed.reserve(local.size());
    for (const auto& v : local) pushed.push_back(apply_hom(hom, v));
    RadicalIdeal support_far = supph(koszul(far, pushed));
    return zar_eq(moved, support_far);
  };
  for (const auto& g : scheme.gluings) {
    for (const auto& I : samples[g.i]) {
      if (!overlap_commutes(g.overlap_ij, g.overlap_ji, g.phi, I)) {
        fail("gluing " + std::to_string(g.i) + "-" + std::to_string(g.j) +
             ": transported support of " + ideal_str(I) + " disagrees");
      }
    }
    for (const auto& I : samples[g.j]) {
      if (!overlap_commutes(g.overlap_ji, g.overlap_ij, g.phi_inv, I)) {
        fail("gluing " + std::to_string(g.j) + "-" + std::to_string(g.i) +
             ": transported support of " + ideal_str(I) + " disagrees");
      }
    }
  }
  return report;
}

}  // namespace pointfree
