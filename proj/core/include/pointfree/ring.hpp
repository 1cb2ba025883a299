#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pointfree {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
struct LocalizeResult;

enum class RingKind {
  integers,      // ZZ
  integers_mod,  // ZZ/n, n >= 2
  prime_field,   // F_p
  rationals,     // QQ
  polynomial,    // k[x_1..x_m], k in {QQ, F_p}
  localization,  // R[1/f], R a PID (ZZ or univariate k[x]); nested inputs flatten
};

/** Exponent vector of a monomial; size equals the ring's variable count. */
struct Monomial {
  std::vector<unsigned> exps;

  unsigned total_degree() const {
    unsigned t = 0;
    for (auto e : exps) t += e;
    return t;
  }
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const { return exps < o.exps; }
};

struct PolyTerm {
  Monomial mono;
  Rat coeff;  // for F_p bases: an integer value in [0, p)
  bool operator==(const PolyTerm&) const = default;
};

/** Sparse polynomial: nonzero terms sorted descending in the storage order
 * (plain lexicographic on exponent vectors). */
using Poly = std::vector<PolyTerm>;

/** Fraction num / f^pow over the base PID of a localization, with pow
 * minimal (f does not divide num when pow > 0).  Minimality makes the
 * representation unique, so structural equality is semantic equality. */
struct LocPayload {
  std::variant<Int, Poly> num;
  unsigned pow = 0;
  bool operator==(const LocPayload&) const = default;
};

/** An element of some ring, in canonical form.  Which alternative is
 * active is determined by the ring's kind; all operations go through the
 * owning Ring so Value itself stays a dumb holder. */
struct Value {
  std::variant<Int, Rat, Poly, LocPayload> data;
  bool operator==(const Value&) const = default;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  // -- construction -------------------------------------------------------
  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr integers_mod(const Int& n);
  static RingPtr prime_field(const Int& p);
  static RingPtr polynomial(const RingPtr& coefficient_field,
                            std::vector<std::string> variables);

  // -- descriptor ---------------------------------------------------------
  RingKind kind() const { return kind_; }
  const Int& modulus() const;                      // integers_mod / prime_field
  const RingPtr& coefficient_field() const;        // polynomial
  const std::vector<std::string>& variables() const;
  const RingPtr& localization_base() const;        // localization: ZZ or k[x]
  const Value& inverted_element() const;           // localization: the f of R[1/f]

  std::string name() const;
  bool equals(const Ring& other) const;

  bool is_field() const;
  bool is_domain() const;
  /** PIDs with effective arithmetic: ZZ, fields, univariate polynomials
   * over a field, and localizations of these. */
  bool is_pid() const;

  // -- element arithmetic --------------------------------------------------
  Value zero() const;
  Value one() const;
  Value from_int(const Int& n) const;
  /** Embeds a rational number when its denominator is invertible. */
  std::optional<Value> from_rational(const Rat& q) const;
  Value var_value(const std::string& name) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value pow(const Value& a, unsigned long long e) const;

  bool is_zero(const Value& a) const;
  bool is_one(const Value& a) const;
  bool is_unit(const Value& a) const;
  std::optional<Value> inverse(const Value& a) const;
  /** Exact division: the unique q with q*b = a, if it exists. */
  std::optional<Value> div_exact(const Value& a, const Value& b) const;
  bool divides(const Value& a, const Value& b) const;  // a | b

  // -- PID support (requires is_pid) ----------------------------------------
  /** gcd normalized to the canonical associate. */
  Value gcd(const Value& a, const Value& b) const;
  struct Xgcd {
    Value g, u, v;  // u*a + v*b = g, g canonical
  };
  Xgcd xgcd(const Value& a, const Value& b) const;
  /** Strips units: nonnegative for ZZ, monic for k[x], and additionally
   * free of primes of the inverted element for localizations. */
  Value canonical_associate(const Value& a) const;
  /** The unit u with a = u * canonical_associate(a); one() for a = 0. */
  Value unit_part(const Value& a) const;
  /** Positive size measure used for pivot selection: |n| for integers,
   * degree + 1 for polynomials, measured on the canonical associate for
   * localizations; 0 exactly for zero. */
  Int pivot_norm(const Value& a) const;

  // -- polynomial access ----------------------------------------------------
  const Poly& as_poly(const Value& a) const;
  Value from_poly(Poly p) const;  // sorts/merges into canonical form
  Rat coeff_add(const Rat& a, const Rat& b) const;
  Rat coeff_mul(const Rat& a, const Rat& b) const;
  Rat coeff_neg(const Rat& a) const;
  Rat coeff_inv(const Rat& a) const;

  // -- localization access ---------------------------------------------------
  Value loc_wrap(const Value& base_element, unsigned pow = 0) const;
  Value loc_numerator(const Value& a) const;  // as base-ring element
  unsigned loc_denominator_pow(const Value& a) const;

  // -- strings ----------------------------------------------------------------
  std::string str(const Value& a) const;
  /** Parses the element grammar: integer and rational literals, declared
   * variable names, + - * / ^ and parentheses.  Division requires an
   * invertible divisor. */
  Value parse(const std::string& text) const;

  /** Canonical embedding into a localization of this ring (or this ring
   * itself); nullopt when no canonical map is known. */
  std::optional<Value> coerce_into(const Value& a, const Ring& target) const;

 private:
  friend LocalizeResult localize(const RingPtr& ring, const Value& f);

  RingKind kind_;
  Int modulus_;                          // integers_mod / prime_field
  RingPtr coefficient_field_;            // polynomial
  std::vector<std::string> variables_;   // polynomial
  RingPtr localization_base_;            // localization
  Value inverted_;                       // localization

  Ring() = default;

  // helpers (defined in ring.cpp)
  Value base_wrap(const std::variant<Int, Poly>& payload) const;
  std::variant<Int, Poly> base_unwrap(const Value& v) const;
  Value loc_normalize(Value base_num, unsigned pow) const;
  Value strip_inverted(const Value& base_element) const;
};

struct LocalizeResult {
  RingPtr ring;
  bool was_unit = false;  // f was already invertible; ring is the input ring
};

/** R[1/f].  Errors on f = 0 and on unsupported bases; flattens nested
 * localizations; returns the input ring flagged when f is already a unit. */
LocalizeResult localize(const RingPtr& ring, const Value& f);

/** A ring map out of a finitely presented source, given by generator
 * images: variable images for polynomial sources (coefficients map
 * canonically) and nothing else for ZZ, ZZ/n, F_p, QQ sources.
 * Localization sources use the base's images and invert the image of f. */
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::map<std::string, Value> images;  // variable name -> target element
};

/** Validates well-definedness (characteristic relations, invertibility of
 * the localized element's image, coefficient embeddability). */
RingHom make_hom(RingPtr source, RingPtr target, std::map<std::string, Value> images);
Value apply_hom(const RingHom& hom, const Value& a);

/** Decides f ∈ √(g_1, …, g_k).
 *
 * Integers: reduce to g = gcd(g_i) and repeatedly divide g by gcd(g, f);
 * membership iff the loop ends in a unit.  ZZ/n: lift and adjoin n.
 * Fields: f = 0 or some generator nonzero.  Univariate polynomials: the
 * same gcd loop as ZZ.  Multivariate polynomials: 1 ∈ (g_1,…,g_k, 1 - y f)
 * in R[y], decided by a Groebner basis.  Localizations R[1/s]: clear
 * denominators and decide f·s ∈ √(numerators) in the base. */
bool radical_member(const RingPtr& ring, const Value& f, const std::vector<Value>& gens);

}  // namespace pointfree
