#include "pointfree/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "pointfree/errors.hpp"
#include "pointfree/groebner.hpp"

namespace pointfree {

namespace {

Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int imod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int ipowm(Int base, Int exp, const Int& mod) {
  return boost::multiprecision::powm(imod(base, mod), exp, mod);
}

bool probably_prime(const Int& p) {
  if (p < 2) return false;
  static const unsigned small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                          23, 29, 31, 37, 41, 43, 47};
  for (unsigned q : small_primes) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  // Miller-Rabin; the base set is deterministic well past 64-bit inputs.
  Int d = p - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = ipowm(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = ipowm(x, 2, p);
      if (x == p - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct IntXgcd {
  Int g, u, v;
};

IntXgcd int_xgcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_u - q * u; old_u = u; u = t;
    t = old_v - q * v; old_v = v; v = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// ---------------------------------------------------------------------------
// coefficient field helpers for polynomials (QQ, or F_p with residues stored
// as integer-valued rationals in [0, p))
// ---------------------------------------------------------------------------

struct CoeffCtx {
  bool fp = false;
  Int p = 0;
};

Rat cnorm(const CoeffCtx& c, const Rat& a) {
  if (!c.fp) return a;
  return Rat(imod(numerator(a), c.p));
}

Rat cadd(const CoeffCtx& c, const Rat& a, const Rat& b) { return cnorm(c, a + b); }
Rat cmul(const CoeffCtx& c, const Rat& a, const Rat& b) { return cnorm(c, a * b); }
Rat cneg(const CoeffCtx& c, const Rat& a) { return cnorm(c, -a); }

Rat cinv(const CoeffCtx& c, const Rat& a) {
  if (a == 0) throw Error("division by zero coefficient");
  if (!c.fp) return Rat(1) / a;
  auto e = int_xgcd(imod(numerator(a), c.p), c.p);
  if (e.g != 1) throw Error("non-invertible residue");
  return Rat(imod(e.u, c.p));
}

// ---------------------------------------------------------------------------
// polynomial helpers; storage order is descending plain lex on exponents
// ---------------------------------------------------------------------------

Poly poly_normalize(const CoeffCtx& c, std::vector<PolyTerm> terms) {
  std::map<Monomial, Rat> acc;
  for (auto& t : terms) {
    Rat v = cnorm(c, t.coeff);
    if (v == 0) continue;
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(t.mono, v);
    else {
      it->second = cadd(c, it->second, v);
      if (it->second == 0) acc.erase(it);
    }
  }
  Poly out;
  out.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    out.push_back({it->first, it->second});
  return out;
}

Poly poly_add(const CoeffCtx& c, const Poly& a, const Poly& b) {
  std::vector<PolyTerm> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return poly_normalize(c, std::move(all));
}

Poly poly_neg(const CoeffCtx& c, const Poly& a) {
  Poly out = a;
  for (auto& t : out) t.coeff = cneg(c, t.coeff);
  return out;
}

Poly poly_mul(const CoeffCtx& c, const Poly& a, const Poly& b) {
  std::vector<PolyTerm> all;
  all.reserve(a.size() * b.size());
  for (const auto& ta : a)
    for (const auto& tb : b) {
      Monomial m = ta.mono;
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        unsigned long long e = static_cast<unsigned long long>(m.exps[i]) + tb.mono.exps[i];
        if (e > 0x7fffffffULL) throw CapacityError("polynomial exponent overflow");
        m.exps[i] = static_cast<unsigned>(e);
      }
      all.push_back({std::move(m), cmul(c, ta.coeff, tb.coeff)});
    }
  return poly_normalize(c, std::move(all));
}

bool poly_is_constant(const Poly& a) {
  return a.empty() || (a.size() == 1 && a[0].mono.total_degree() == 0);
}

unsigned poly_degree_1(const Poly& a) {  // univariate degree; 0 for constants
  unsigned d = 0;
  for (const auto& t : a) d = std::max(d, t.mono.exps[0]);
  return d;
}

// univariate division with remainder (field coefficients)
void poly_divmod_1(const CoeffCtx& c, Poly a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw Error("polynomial division by zero");
  std::size_t nv = b[0].mono.exps.size();
  q.clear();
  unsigned db = poly_degree_1(b);
  Rat lb = b[0].coeff;  // storage order puts the leading term first
  while (!a.empty() && poly_degree_1(a) >= db) {
    unsigned da = poly_degree_1(a);
    Rat qc = cmul(c, a[0].coeff, cinv(c, lb));
    Monomial qm;
    qm.exps.assign(nv, 0);
    qm.exps[0] = da - db;
    Poly qt{{qm, qc}};
    q = poly_add(c, q, qt);
    a = poly_add(c, a, poly_neg(c, poly_mul(c, qt, b)));
  }
  r = a;
}

Poly poly_monic(const CoeffCtx& c, const Poly& a) {
  if (a.empty()) return a;
  Rat inv = cinv(c, a[0].coeff);
  Poly out = a;
  for (auto& t : out) t.coeff = cmul(c, t.coeff, inv);
  return out;
}

Poly poly_gcd_1(const CoeffCtx& c, Poly a, Poly b) {
  while (!b.empty()) {
    Poly q, r;
    poly_divmod_1(c, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(c, a);
}

// exact multivariate division by a single divisor (any field base); finds the
// quotient iff it exists
std::optional<Poly> poly_div_exact_n(const CoeffCtx& c, Poly a, const Poly& b) {
  if (b.empty()) return std::nullopt;
  const Monomial& lm = b[0].mono;
  Poly q;
  while (!a.empty()) {
    bool divisible = true;
    for (std::size_t i = 0; i < lm.exps.size(); ++i)
      if (a[0].mono.exps[i] < lm.exps[i]) {
        divisible = false;
        break;
      }
    if (!divisible) return std::nullopt;
    Monomial qm = a[0].mono;
    for (std::size_t i = 0; i < lm.exps.size(); ++i) qm.exps[i] -= lm.exps[i];
    Poly qt{{qm, cmul(c, a[0].coeff, cinv(c, b[0].coeff))}};
    q = poly_add(c, q, qt);
    a = poly_add(c, a, poly_neg(c, poly_mul(c, qt, b)));
  }
  return q;
}

std::string coeff_str(const Rat& q) {
  std::ostringstream os;
  if (denominator(q) == 1)
    os << numerator(q);
  else
    os << numerator(q) << "/" << denominator(q);
  return os.str();
}

std::string poly_str(const Poly& a, const std::vector<std::string>& vars) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a) {
    Rat c = t.coeff;
    bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (t.mono.exps[i] > 1) mono += "^" + std::to_string(t.mono.exps[i]);
    }
    if (mono.empty()) {
      os << coeff_str(mag);
    } else {
      if (mag != 1) os << coeff_str(mag) << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

RingPtr Ring::integers() {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::integers;
  return r;
}

RingPtr Ring::rationals() {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::rationals;
  return r;
}

RingPtr Ring::integers_mod(const Int& n) {
  if (n < 2) throw InputError("modulus must be at least 2");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::integers_mod;
  r->modulus_ = n;
  return r;
}

RingPtr Ring::prime_field(const Int& p) {
  if (!probably_prime(p)) throw InputError("field characteristic must be prime");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::prime_field;
  r->modulus_ = p;
  return r;
}

RingPtr Ring::polynomial(const RingPtr& coefficient_field,
                         std::vector<std::string> variables) {
  if (!coefficient_field ||
      (coefficient_field->kind() != RingKind::rationals &&
       coefficient_field->kind() != RingKind::prime_field))
    throw InputError("polynomial coefficients must form a field (QQ or F_p)");
  if (variables.empty()) throw InputError("polynomial ring needs at least one variable");
  for (const auto& v : variables)
    if (!valid_identifier(v)) throw InputError("invalid variable name: " + v);
  auto sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("duplicate variable name");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::polynomial;
  r->coefficient_field_ = coefficient_field;
  r->variables_ = std::move(variables);
  return r;
}

LocalizeResult localize(const RingPtr& ring, const Value& f) {
  if (!ring) throw InputError("missing ring");
  if (ring->is_zero(f)) throw InputError("cannot invert zero");
  switch (ring->kind()) {
    case RingKind::rationals:
    case RingKind::prime_field:
      return {ring, true};
    case RingKind::integers_mod:
      throw InputError("localization base must be an integral domain");
    case RingKind::polynomial:
      if (ring->variables().size() != 1)
        throw InputError("localization base must be a principal ideal domain");
      [[fallthrough]];
    case RingKind::integers: {
      if (ring->is_unit(f)) return {ring, true};
      auto r = std::shared_ptr<Ring>(new Ring());
      r->kind_ = RingKind::localization;
      r->localization_base_ = ring;
      r->inverted_ = ring->canonical_associate(f);
      return {r, false};
    }
    case RingKind::localization: {
      if (ring->is_unit(f)) return {ring, true};
      const RingPtr& base = ring->localization_base();
      Value num = ring->loc_numerator(f);
      Value combined = base->mul(base->canonical_associate(ring->inverted_element()),
                                 base->canonical_associate(num));
      auto r = std::shared_ptr<Ring>(new Ring());
      r->kind_ = RingKind::localization;
      r->localization_base_ = base;
      r->inverted_ = base->canonical_associate(combined);
      return {r, false};
    }
  }
  throw Error("unreachable ring kind");
}

// ---------------------------------------------------------------------------
// descriptor
// ---------------------------------------------------------------------------

const Int& Ring::modulus() const {
  if (kind_ != RingKind::integers_mod && kind_ != RingKind::prime_field)
    throw Error("ring has no modulus");
  return modulus_;
}

const RingPtr& Ring::coefficient_field() const {
  if (kind_ != RingKind::polynomial) throw Error("ring has no coefficient field");
  return coefficient_field_;
}

const std::vector<std::string>& Ring::variables() const {
  static const std::vector<std::string> none;
  if (kind_ == RingKind::polynomial) return variables_;
  if (kind_ == RingKind::localization &&
      localization_base_->kind() == RingKind::polynomial)
    return localization_base_->variables();
  return none;
}

const RingPtr& Ring::localization_base() const {
  if (kind_ != RingKind::localization) throw Error("ring is not a localization");
  return localization_base_;
}

const Value& Ring::inverted_element() const {
  if (kind_ != RingKind::localization) throw Error("ring is not a localization");
  return inverted_;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::integers: return "ZZ";
    case RingKind::rationals: return "QQ";
    case RingKind::integers_mod: return "ZZ/" + modulus_.str();
    case RingKind::prime_field: return "F_" + modulus_.str();
    case RingKind::polynomial: {
      std::string s = coefficient_field_->name() + "[";
      for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (i) s += ",";
        s += variables_[i];
      }
      return s + "]";
    }
    case RingKind::localization:
      return localization_base_->name() + "[1/" +
             localization_base_->str(inverted_) + "]";
  }
  return "?";
}

bool Ring::equals(const Ring& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case RingKind::integers:
    case RingKind::rationals:
      return true;
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return modulus_ == other.modulus_;
    case RingKind::polynomial:
      return coefficient_field_->equals(*other.coefficient_field_) &&
             variables_ == other.variables_;
    case RingKind::localization: {
      if (!localization_base_->equals(*other.localization_base_)) return false;
      // same ring iff the inverted elements have the same prime support
      const RingPtr& b = localization_base_;
      auto divides_power = [&](const Value& a, const Value& of) {
        Value r = a;
        while (!b->is_unit(r) && !b->is_zero(r)) {
          Value d = b->gcd(r, of);
          if (b->is_unit(d)) return false;
          r = *b->div_exact(r, d);
        }
        return !b->is_zero(r);
      };
      return divides_power(inverted_, other.inverted_) &&
             divides_power(other.inverted_, inverted_);
    }
  }
  return false;
}

bool Ring::is_field() const {
  return kind_ == RingKind::rationals || kind_ == RingKind::prime_field;
}

bool Ring::is_domain() const {
  if (kind_ == RingKind::integers_mod) return probably_prime(modulus_);
  return true;
}

bool Ring::is_pid() const {
  switch (kind_) {
    case RingKind::integers:
    case RingKind::rationals:
    case RingKind::prime_field:
    case RingKind::localization:
      return true;
    case RingKind::polynomial:
      return variables_.size() == 1;
    case RingKind::integers_mod:
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// value plumbing
// ---------------------------------------------------------------------------

namespace {

const Int& as_int(const Value& v) {
  if (auto p = std::get_if<Int>(&v.data)) return *p;
  throw InputError("element does not belong to this ring");
}

const Rat& as_rat(const Value& v) {
  if (auto p = std::get_if<Rat>(&v.data)) return *p;
  throw InputError("element does not belong to this ring");
}

const LocPayload& as_loc(const Value& v) {
  if (auto p = std::get_if<LocPayload>(&v.data)) return *p;
  throw InputError("element does not belong to this ring");
}

CoeffCtx coeff_ctx(const Ring& poly_ring) {
  CoeffCtx c;
  if (poly_ring.coefficient_field()->kind() == RingKind::prime_field) {
    c.fp = true;
    c.p = poly_ring.coefficient_field()->modulus();
  }
  return c;
}

}  // namespace

const Poly& Ring::as_poly(const Value& a) const {
  if (auto p = std::get_if<Poly>(&a.data)) return *p;
  throw InputError("element does not belong to this ring");
}

Value Ring::from_poly(Poly p) const {
  if (kind_ != RingKind::polynomial) throw Error("not a polynomial ring");
  return Value{poly_normalize(coeff_ctx(*this), std::move(p))};
}

Rat Ring::coeff_add(const Rat& a, const Rat& b) const { return cadd(coeff_ctx(*this), a, b); }
Rat Ring::coeff_mul(const Rat& a, const Rat& b) const { return cmul(coeff_ctx(*this), a, b); }
Rat Ring::coeff_neg(const Rat& a) const { return cneg(coeff_ctx(*this), a); }
Rat Ring::coeff_inv(const Rat& a) const { return cinv(coeff_ctx(*this), a); }

Value Ring::base_wrap(const std::variant<Int, Poly>& payload) const {
  if (std::holds_alternative<Int>(payload)) return Value{std::get<Int>(payload)};
  return Value{std::get<Poly>(payload)};
}

std::variant<Int, Poly> Ring::base_unwrap(const Value& v) const {
  if (auto p = std::get_if<Int>(&v.data)) return *p;
  if (auto p = std::get_if<Poly>(&v.data)) return *p;
  throw InputError("element does not belong to the localization base");
}

Value Ring::loc_wrap(const Value& base_element, unsigned pow) const {
  if (kind_ != RingKind::localization) throw Error("not a localization");
  return loc_normalize(base_element, pow);
}

Value Ring::loc_numerator(const Value& a) const {
  if (kind_ != RingKind::localization) throw Error("not a localization");
  return base_wrap(as_loc(a).num);
}

unsigned Ring::loc_denominator_pow(const Value& a) const {
  if (kind_ != RingKind::localization) throw Error("not a localization");
  return as_loc(a).pow;
}

Value Ring::loc_normalize(Value base_num, unsigned pow) const {
  const RingPtr& b = localization_base_;
  if (b->is_zero(base_num)) return Value{LocPayload{base_unwrap(b->zero()), 0}};
  while (pow > 0) {
    auto q = b->div_exact(base_num, inverted_);
    if (!q) break;
    base_num = *q;
    --pow;
  }
  return Value{LocPayload{base_unwrap(base_num), pow}};
}

Value Ring::strip_inverted(const Value& base_element) const {
  const RingPtr& b = localization_base_;
  Value r = base_element;
  if (b->is_zero(r)) return r;
  while (true) {
    Value d = b->gcd(r, inverted_);
    if (b->is_unit(d)) return r;
    r = *b->div_exact(r, d);
  }
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

Value Ring::zero() const {
  switch (kind_) {
    case RingKind::integers:
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return Value{Int(0)};
    case RingKind::rationals: return Value{Rat(0)};
    case RingKind::polynomial: return Value{Poly{}};
    case RingKind::localization:
      return Value{LocPayload{base_unwrap(localization_base_->zero()), 0}};
  }
  throw Error("unreachable");
}

Value Ring::one() const { return from_int(1); }

Value Ring::from_int(const Int& n) const {
  switch (kind_) {
    case RingKind::integers: return Value{n};
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return Value{imod(n, modulus_)};
    case RingKind::rationals: return Value{Rat(n)};
    case RingKind::polynomial: {
      CoeffCtx c = coeff_ctx(*this);
      Rat v = cnorm(c, Rat(n));
      if (v == 0) return Value{Poly{}};
      Monomial m;
      m.exps.assign(variables_.size(), 0);
      return Value{Poly{{m, v}}};
    }
    case RingKind::localization:
      return Value{LocPayload{base_unwrap(localization_base_->from_int(n)), 0}};
  }
  throw Error("unreachable");
}

std::optional<Value> Ring::from_rational(const Rat& q) const {
  Value num = from_int(numerator(q));
  if (denominator(q) == 1) return num;
  auto inv = inverse(from_int(denominator(q)));
  if (!inv) return std::nullopt;
  return mul(num, *inv);
}

Value Ring::var_value(const std::string& name) const {
  if (kind_ == RingKind::polynomial) {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) {
        Monomial m;
        m.exps.assign(variables_.size(), 0);
        m.exps[i] = 1;
        return Value{Poly{{m, Rat(1)}}};
      }
    throw InputError("unknown symbol: " + name);
  }
  if (kind_ == RingKind::localization &&
      localization_base_->kind() == RingKind::polynomial)
    return loc_wrap(localization_base_->var_value(name), 0);
  throw InputError("unknown symbol: " + name);
}

Value Ring::add(const Value& a, const Value& b) const {
  switch (kind_) {
    case RingKind::integers: return Value{Int(as_int(a) + as_int(b))};
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return Value{imod(as_int(a) + as_int(b), modulus_)};
    case RingKind::rationals: return Value{Rat(as_rat(a) + as_rat(b))};
    case RingKind::polynomial:
      return Value{poly_add(coeff_ctx(*this), as_poly(a), as_poly(b))};
    case RingKind::localization: {
      const auto& x = as_loc(a);
      const auto& y = as_loc(b);
      const RingPtr& base = localization_base_;
      unsigned m = std::max(x.pow, y.pow);
      Value xn = base->mul(base_wrap(x.num), base->pow(inverted_, m - x.pow));
      Value yn = base->mul(base_wrap(y.num), base->pow(inverted_, m - y.pow));
      return loc_normalize(base->add(xn, yn), m);
    }
  }
  throw Error("unreachable");
}

Value Ring::neg(const Value& a) const {
  switch (kind_) {
    case RingKind::integers: return Value{Int(-as_int(a))};
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return Value{imod(-as_int(a), modulus_)};
    case RingKind::rationals: return Value{Rat(-as_rat(a))};
    case RingKind::polynomial:
      return Value{poly_neg(coeff_ctx(*this), as_poly(a))};
    case RingKind::localization: {
      const auto& x = as_loc(a);
      return Value{LocPayload{
          base_unwrap(localization_base_->neg(base_wrap(x.num))), x.pow}};
    }
  }
  throw Error("unreachable");
}

Value Ring::sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

Value Ring::mul(const Value& a, const Value& b) const {
  switch (kind_) {
    case RingKind::integers: return Value{Int(as_int(a) * as_int(b))};
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return Value{imod(as_int(a) * as_int(b), modulus_)};
    case RingKind::rationals: return Value{Rat(as_rat(a) * as_rat(b))};
    case RingKind::polynomial:
      return Value{poly_mul(coeff_ctx(*this), as_poly(a), as_poly(b))};
    case RingKind::localization: {
      const auto& x = as_loc(a);
      const auto& y = as_loc(b);
      unsigned long long p = static_cast<unsigned long long>(x.pow) + y.pow;
      if (p > 0x7fffffffULL) throw CapacityError("denominator exponent overflow");
      return loc_normalize(
          localization_base_->mul(base_wrap(x.num), base_wrap(y.num)),
          static_cast<unsigned>(p));
    }
  }
  throw Error("unreachable");
}

Value Ring::pow(const Value& a, unsigned long long e) const {
  Value acc = one();
  Value base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

bool Ring::is_zero(const Value& a) const {
  switch (kind_) {
    case RingKind::integers:
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return as_int(a) == 0;
    case RingKind::rationals: return as_rat(a) == 0;
    case RingKind::polynomial: return as_poly(a).empty();
    case RingKind::localization: {
      const auto& x = as_loc(a);
      return localization_base_->is_zero(base_wrap(x.num));
    }
  }
  throw Error("unreachable");
}

bool Ring::is_one(const Value& a) const { return a == one(); }

bool Ring::is_unit(const Value& a) const {
  switch (kind_) {
    case RingKind::integers: return as_int(a) == 1 || as_int(a) == -1;
    case RingKind::rationals: return as_rat(a) != 0;
    case RingKind::prime_field: return as_int(a) != 0;
    case RingKind::integers_mod: return igcd(as_int(a), modulus_) == 1;
    case RingKind::polynomial: {
      const Poly& p = as_poly(a);
      return poly_is_constant(p) && !p.empty();
    }
    case RingKind::localization: {
      if (is_zero(a)) return false;
      Value stripped = strip_inverted(base_wrap(as_loc(a).num));
      return localization_base_->is_unit(stripped);
    }
  }
  throw Error("unreachable");
}

std::optional<Value> Ring::inverse(const Value& a) const {
  switch (kind_) {
    case RingKind::integers:
      if (as_int(a) == 1 || as_int(a) == -1) return a;
      return std::nullopt;
    case RingKind::rationals:
      if (as_rat(a) == 0) return std::nullopt;
      return Value{Rat(1 / as_rat(a))};
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      auto e = int_xgcd(as_int(a), modulus_);
      if (e.g != 1) return std::nullopt;
      return Value{imod(e.u, modulus_)};
    }
    case RingKind::polynomial: {
      const Poly& p = as_poly(a);
      if (!poly_is_constant(p) || p.empty()) return std::nullopt;
      CoeffCtx c = coeff_ctx(*this);
      Poly out = p;
      out[0].coeff = cinv(c, out[0].coeff);
      return Value{out};
    }
    case RingKind::localization: {
      if (!is_unit(a)) return std::nullopt;
      const RingPtr& b = localization_base_;
      const auto& x = as_loc(a);
      Value n = base_wrap(x.num);
      Value w = strip_inverted(n);            // base unit
      Value s = *b->div_exact(n, w);          // product of primes of f
      Value p = b->one();
      unsigned m = 0;
      while (!b->divides(s, p)) {
        p = b->mul(p, inverted_);
        if (++m > 4096) throw CapacityError("localization inverse exponent too large");
      }
      Value winv = *b->inverse(w);
      Value num = b->mul(winv, b->mul(*b->div_exact(p, s), b->pow(inverted_, x.pow)));
      return loc_normalize(num, m);
    }
  }
  throw Error("unreachable");
}

std::optional<Value> Ring::div_exact(const Value& a, const Value& b) const {
  if (is_zero(b)) return std::nullopt;
  if (is_zero(a)) return zero();
  switch (kind_) {
    case RingKind::integers: {
      if (as_int(a) % as_int(b) != 0) return std::nullopt;
      return Value{Int(as_int(a) / as_int(b))};
    }
    case RingKind::rationals:
    case RingKind::prime_field:
      return mul(a, *inverse(b));
    case RingKind::integers_mod: {
      auto inv = inverse(b);
      if (!inv) return std::nullopt;
      return mul(a, *inv);
    }
    case RingKind::polynomial: {
      CoeffCtx c = coeff_ctx(*this);
      if (variables_.size() == 1) {
        Poly q, r;
        poly_divmod_1(c, as_poly(a), as_poly(b), q, r);
        if (!r.empty()) return std::nullopt;
        return Value{q};
      }
      auto q = poly_div_exact_n(c, as_poly(a), as_poly(b));
      if (!q) return std::nullopt;
      return Value{*q};
    }
    case RingKind::localization: {
      const RingPtr& bs = localization_base_;
      const auto& x = as_loc(a);
      const auto& y = as_loc(b);
      Value bn = base_wrap(y.num);
      Value r = strip_inverted(bn);            // f-free part of the divisor
      Value s = *bs->div_exact(bn, r);         // primes of f only
      auto c0 = bs->div_exact(base_wrap(x.num), r);
      if (!c0) return std::nullopt;
      Value p = bs->one();
      unsigned m = 0;
      while (!bs->divides(s, p)) {
        p = bs->mul(p, inverted_);
        if (++m > 4096) throw CapacityError("localization division exponent too large");
      }
      unsigned long long newpow = static_cast<unsigned long long>(m) + x.pow;
      Value num = bs->mul(*c0, bs->mul(*bs->div_exact(p, s), bs->pow(inverted_, y.pow)));
      if (newpow > 0x7fffffffULL) throw CapacityError("denominator exponent overflow");
      return loc_normalize(num, static_cast<unsigned>(newpow));
    }
  }
  throw Error("unreachable");
}

bool Ring::divides(const Value& a, const Value& b) const {
  if (is_zero(b)) return true;
  if (is_zero(a)) return false;
  return div_exact(b, a).has_value();
}

// ---------------------------------------------------------------------------
// PID support
// ---------------------------------------------------------------------------

Value Ring::canonical_associate(const Value& a) const {
  if (is_zero(a)) return zero();
  switch (kind_) {
    case RingKind::integers: return Value{iabs(as_int(a))};
    case RingKind::rationals:
    case RingKind::prime_field:
      return one();
    case RingKind::integers_mod:
      throw Error("no canonical associate over ZZ/n");
    case RingKind::polynomial:
      return Value{poly_monic(coeff_ctx(*this), as_poly(a))};
    case RingKind::localization: {
      Value stripped = strip_inverted(base_wrap(as_loc(a).num));
      return loc_wrap(localization_base_->canonical_associate(stripped), 0);
    }
  }
  throw Error("unreachable");
}

Value Ring::unit_part(const Value& a) const {
  if (is_zero(a)) return one();
  auto u = div_exact(a, canonical_associate(a));
  if (!u) throw Error("canonical associate does not divide its element");
  return *u;
}

Value Ring::gcd(const Value& a, const Value& b) const {
  if (!is_pid()) throw Error("gcd requires a principal ideal domain");
  switch (kind_) {
    case RingKind::integers: return Value{igcd(as_int(a), as_int(b))};
    case RingKind::rationals:
    case RingKind::prime_field:
      return (is_zero(a) && is_zero(b)) ? zero() : one();
    case RingKind::polynomial:
      return Value{poly_gcd_1(coeff_ctx(*this), as_poly(a), as_poly(b))};
    case RingKind::localization: {
      const RingPtr& bs = localization_base_;
      Value ra = is_zero(a) ? bs->zero() : strip_inverted(base_wrap(as_loc(a).num));
      Value rb = is_zero(b) ? bs->zero() : strip_inverted(base_wrap(as_loc(b).num));
      return loc_wrap(bs->gcd(ra, rb), 0);
    }
    default:
      throw Error("unreachable");
  }
}

Ring::Xgcd Ring::xgcd(const Value& a, const Value& b) const {
  if (!is_pid()) throw Error("xgcd requires a principal ideal domain");
  if (is_zero(a) && is_zero(b)) return {zero(), zero(), zero()};
  if (is_zero(a)) {
    Value u = unit_part(b);
    return {canonical_associate(b), zero(), *inverse(u)};
  }
  if (is_zero(b)) {
    Value u = unit_part(a);
    return {canonical_associate(a), *inverse(u), zero()};
  }
  switch (kind_) {
    case RingKind::integers: {
      auto e = int_xgcd(as_int(a), as_int(b));
      return {Value{e.g}, Value{e.u}, Value{e.v}};
    }
    case RingKind::rationals:
    case RingKind::prime_field:
      return {one(), *inverse(a), zero()};
    case RingKind::polynomial: {
      CoeffCtx c = coeff_ctx(*this);
      Poly old_r = as_poly(a), r = as_poly(b);
      Poly old_u{{Monomial{std::vector<unsigned>(variables_.size(), 0)}, Rat(1)}}, u{};
      Poly old_v{}, v{{Monomial{std::vector<unsigned>(variables_.size(), 0)}, Rat(1)}};
      while (!r.empty()) {
        Poly q, rem;
        poly_divmod_1(c, old_r, r, q, rem);
        Poly qu = poly_mul(c, q, u), qv = poly_mul(c, q, v);
        Poly nu = poly_add(c, old_u, poly_neg(c, qu));
        Poly nv = poly_add(c, old_v, poly_neg(c, qv));
        old_r = std::move(r); r = std::move(rem);
        old_u = std::move(u); u = std::move(nu);
        old_v = std::move(v); v = std::move(nv);
      }
      Rat lead = old_r[0].coeff;
      Rat inv = cinv(c, lead);
      auto scale = [&](Poly p) {
        for (auto& t : p) t.coeff = cmul(c, t.coeff, inv);
        return p;
      };
      return {Value{scale(old_r)}, Value{scale(old_u)}, Value{scale(old_v)}};
    }
    case RingKind::localization: {
      const RingPtr& bs = localization_base_;
      Value ra = strip_inverted(base_wrap(as_loc(a).num));
      Value rb = strip_inverted(base_wrap(as_loc(b).num));
      auto e = bs->xgcd(ra, rb);
      Value ua = *div_exact(a, loc_wrap(ra, 0));  // unit of this ring
      Value ub = *div_exact(b, loc_wrap(rb, 0));
      return {loc_wrap(e.g, 0), mul(loc_wrap(e.u, 0), *inverse(ua)),
              mul(loc_wrap(e.v, 0), *inverse(ub))};
    }
    default:
      throw Error("unreachable");
  }
}

Int Ring::pivot_norm(const Value& a) const {
  if (is_zero(a)) return 0;
  switch (kind_) {
    case RingKind::integers: return iabs(as_int(a));
    case RingKind::rationals:
    case RingKind::prime_field:
    case RingKind::integers_mod:
      return 1;
    case RingKind::polynomial: {
      unsigned d = 0;
      for (const auto& t : as_poly(a)) d = std::max(d, t.mono.total_degree());
      return Int(d) + 1;
    }
    case RingKind::localization:
      return localization_base_->pivot_norm(
          base_wrap(as_loc(canonical_associate(a)).num));
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// strings
// ---------------------------------------------------------------------------

std::string Ring::str(const Value& a) const {
  switch (kind_) {
    case RingKind::integers:
    case RingKind::integers_mod:
    case RingKind::prime_field:
      return as_int(a).str();
    case RingKind::rationals: {
      const Rat& q = as_rat(a);
      return coeff_str(q);
    }
    case RingKind::polynomial:
      return poly_str(as_poly(a), variables_);
    case RingKind::localization: {
      const auto& x = as_loc(a);
      const RingPtr& b = localization_base_;
      Value num = base_wrap(x.num);
      if (b->is_zero(num)) return "0";
      if (x.pow == 0) return b->str(num);
      std::string ns = b->str(num);
      bool wrap_num = std::holds_alternative<Poly>(x.num) &&
                      std::get<Poly>(x.num).size() > 1;
      if (wrap_num) ns = "(" + ns + ")";
      Value den = b->pow(inverted_, x.pow);
      std::string ds = b->str(den);
      bool wrap_den =
          (std::holds_alternative<Poly>(base_unwrap(den)) && b->as_poly(den).size() > 1);
      if (wrap_den) ds = "(" + ds + ")";
      return ns + "/" + ds;
    }
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::optional<Int> integer() {
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      return std::nullopt;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }
  std::optional<std::string> name() {
    skip();
    if (i >= s.size() || (!std::isalpha(static_cast<unsigned char>(s[i])) && s[i] != '_'))
      return std::nullopt;
    std::size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
      ++j;
    std::string v = s.substr(i, j - i);
    i = j;
    return v;
  }
};

class ElementParser {
 public:
  ElementParser(const Ring& ring, const std::string& text) : ring_(ring), lex_(text) {}

  Value run() {
    Value v = expr();
    if (!lex_.eof())
      throw InputError("unexpected input at position " + std::to_string(lex_.i));
    return v;
  }

 private:
  const Ring& ring_;
  Lexer lex_;

  Value expr() {
    Value v = term();
    while (true) {
      if (lex_.eat('+'))
        v = ring_.add(v, term());
      else if (lex_.eat('-'))
        v = ring_.sub(v, term());
      else
        return v;
    }
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (lex_.eat('*'))
        v = ring_.mul(v, factor());
      else if (lex_.eat('/')) {
        Value d = factor();
        auto inv = ring_.inverse(d);
        if (!inv)
          throw InputError("division by a non-invertible element: " + ring_.str(d));
        v = ring_.mul(v, *inv);
      } else
        return v;
    }
  }

  Value factor() {
    if (lex_.eat('-')) return ring_.neg(factor());
    Value v = primary();
    while (lex_.eat('^')) {
      auto e = lex_.integer();
      if (!e) throw InputError("exponent must be a nonnegative integer");
      if (*e > 1000000) throw CapacityError("exponent too large");
      v = ring_.pow(v, e->convert_to<unsigned long long>());
    }
    return v;
  }

  Value primary() {
    if (auto n = lex_.integer()) return ring_.from_int(*n);
    if (auto id = lex_.name()) return ring_.var_value(*id);
    if (lex_.eat('(')) {
      Value v = expr();
      if (!lex_.eat(')')) throw InputError("missing closing parenthesis");
      return v;
    }
    throw InputError("expected a number, name, or parenthesized expression");
  }
};

}  // namespace

Value Ring::parse(const std::string& text) const {
  return ElementParser(*this, text).run();
}

std::optional<Value> Ring::coerce_into(const Value& a, const Ring& target) const {
  if (equals(target)) return a;
  if (target.kind() == RingKind::localization) {
    if (target.localization_base_->equals(*this)) return target.loc_wrap(a, 0);
    if (kind_ == RingKind::localization &&
        localization_base_->equals(*target.localization_base_)) {
      const RingPtr& b = localization_base_;
      const auto& x = as_loc(a);
      // n / f^k  =  n * (g^m / f)^k / g^(m k)   once f | g^m
      Value g_pow = b->one();
      unsigned m = 0;
      while (!b->divides(inverted_, g_pow)) {
        g_pow = b->mul(g_pow, target.inverted_);
        if (++m > 4096) return std::nullopt;
      }
      Value q = *b->div_exact(g_pow, inverted_);
      unsigned long long pw = static_cast<unsigned long long>(m) * x.pow;
      if (pw > 0x7fffffffULL) throw CapacityError("denominator exponent overflow");
      Value num = b->mul(base_wrap(x.num), b->pow(q, x.pow));
      return target.loc_normalize(num, static_cast<unsigned>(pw));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// homomorphisms
// ---------------------------------------------------------------------------

namespace {

bool embeds_rationals(const Ring& target) {
  switch (target.kind()) {
    case RingKind::rationals:
      return true;
    case RingKind::polynomial:
      return target.coefficient_field()->kind() == RingKind::rationals;
    case RingKind::localization:
      return embeds_rationals(*target.localization_base());
    default:
      return false;
  }
}

}  // namespace

RingHom make_hom(RingPtr source, RingPtr target, std::map<std::string, Value> images) {
  if (!source || !target) throw InputError("missing ring in homomorphism");
  RingHom h{source, target, std::move(images)};
  switch (source->kind()) {
    case RingKind::integers:
      if (!h.images.empty()) throw InputError("ZZ admits no generator images");
      return h;
    case RingKind::rationals:
      if (!h.images.empty()) throw InputError("QQ admits no generator images");
      if (!embeds_rationals(*target))
        throw InputError("target does not contain the rational numbers");
      return h;
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      if (!h.images.empty()) throw InputError("residue rings admit no generator images");
      if (!target->is_zero(target->from_int(source->modulus())))
        throw InputError("characteristic is not preserved");
      return h;
    }
    case RingKind::polynomial: {
      for (const auto& v : source->variables())
        if (!h.images.count(v)) throw InputError("missing image for variable " + v);
      if (h.images.size() != source->variables().size())
        throw InputError("image given for an unknown variable");
      const RingPtr& k = source->coefficient_field();
      if (k->kind() == RingKind::rationals) {
        if (!embeds_rationals(*target))
          throw InputError("target does not contain the rational numbers");
      } else if (!target->is_zero(target->from_int(k->modulus()))) {
        throw InputError("characteristic is not preserved");
      }
      return h;
    }
    case RingKind::localization: {
      RingHom base_hom = make_hom(source->localization_base(), target, h.images);
      Value f_img = apply_hom(base_hom, source->inverted_element());
      if (!target->is_unit(f_img))
        throw InputError("the inverted element must map to a unit");
      return h;
    }
  }
  throw Error("unreachable");
}

Value apply_hom(const RingHom& hom, const Value& a) {
  const Ring& src = *hom.source;
  const Ring& tgt = *hom.target;
  switch (src.kind()) {
    case RingKind::integers:
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      if (auto p = std::get_if<Int>(&a.data)) return tgt.from_int(*p);
      throw InputError("element does not belong to the source ring");
    }
    case RingKind::rationals: {
      if (auto p = std::get_if<Rat>(&a.data)) {
        auto v = tgt.from_rational(*p);
        if (!v) throw InputError("rational coefficient does not embed in the target");
        return *v;
      }
      throw InputError("element does not belong to the source ring");
    }
    case RingKind::polynomial: {
      const Poly& p = src.as_poly(a);
      Value acc = tgt.zero();
      for (const auto& t : p) {
        auto cv = tgt.from_rational(t.coeff);
        if (!cv) throw InputError("coefficient does not embed in the target");
        Value term = *cv;
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
          if (t.mono.exps[i] == 0) continue;
          term = tgt.mul(term, tgt.pow(hom.images.at(src.variables()[i]), t.mono.exps[i]));
        }
        acc = tgt.add(acc, term);
      }
      return acc;
    }
    case RingKind::localization: {
      RingHom base_hom{src.localization_base(), hom.target, hom.images};
      Value num = apply_hom(base_hom, src.loc_numerator(a));
      unsigned k = src.loc_denominator_pow(a);
      if (k == 0) return num;
      Value f_img = apply_hom(base_hom, src.inverted_element());
      auto inv = tgt.inverse(f_img);
      if (!inv) throw InputError("the inverted element must map to a unit");
      return tgt.mul(num, tgt.pow(*inv, k));
    }
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// radical membership
// ---------------------------------------------------------------------------

namespace {

// f in sqrt(g) over ZZ or k[x]: repeatedly strip from g the part it shares
// with f; membership iff nothing non-unit survives.
bool strip_to_unit(const Ring& r, Value g, const Value& f) {
  if (r.is_zero(g)) return r.is_zero(f);
  while (true) {
    if (r.is_unit(g)) return true;
    Value d = r.gcd(g, f);
    if (r.is_unit(d)) return false;
    g = *r.div_exact(g, d);
    if (r.is_zero(g)) throw Error("unexpected zero while stripping");
  }
}

}  // namespace

bool radical_member(const RingPtr& ring, const Value& f, const std::vector<Value>& gens) {
  switch (ring->kind()) {
    case RingKind::integers: {
      Value g = ring->zero();
      for (const auto& x : gens) g = ring->gcd(g, x);
      return strip_to_unit(*ring, g, f);
    }
    case RingKind::integers_mod: {
      RingPtr zz = Ring::integers();
      std::vector<Value> lifted;
      lifted.reserve(gens.size() + 1);
      for (const auto& x : gens) lifted.push_back(Value{as_int(x)});
      lifted.push_back(Value{ring->modulus()});
      return radical_member(zz, Value{as_int(f)}, lifted);
    }
    case RingKind::rationals:
    case RingKind::prime_field: {
      for (const auto& x : gens)
        if (!ring->is_zero(x)) return true;
      return ring->is_zero(f);
    }
    case RingKind::polynomial: {
      if (ring->is_zero(f)) return true;
      if (ring->variables().size() == 1) {
        Value g = ring->zero();
        for (const auto& x : gens) g = ring->gcd(g, x);
        return strip_to_unit(*ring, g, f);
      }
      // Adjoin y with y*f = 1; membership iff the extended ideal is the
      // whole ring, read off a reduced Groebner basis.
      std::string fresh = "_w";
      while (std::find(ring->variables().begin(), ring->variables().end(), fresh) !=
             ring->variables().end())
        fresh += "_";
      std::vector<std::string> vars = ring->variables();
      vars.push_back(fresh);
      RingPtr ext = Ring::polynomial(ring->coefficient_field(), vars);
      auto lift = [&](const Value& v) {
        Poly p = ring->as_poly(v);
        for (auto& t : p) t.mono.exps.push_back(0);
        return Value{p};
      };
      std::vector<Value> ideal;
      ideal.reserve(gens.size() + 1);
      for (const auto& x : gens) ideal.push_back(lift(x));
      Value yf = ext->mul(ext->var_value(fresh), lift(f));
      ideal.push_back(ext->sub(ext->one(), yf));
      auto basis = groebner_basis(ext, ideal, MonomialOrder::grevlex);
      for (const auto& b : basis)
        if (ext->is_unit(b)) return true;
      return false;
    }
    case RingKind::localization: {
      const RingPtr& base = ring->localization_base();
      std::vector<Value> nums;
      nums.reserve(gens.size());
      for (const auto& x : gens) nums.push_back(ring->loc_numerator(x));
      Value probe = base->mul(ring->loc_numerator(f), ring->inverted_element());
      return radical_member(base, probe, nums);
    }
  }
  throw Error("unreachable");
}

}  // namespace pointfree
