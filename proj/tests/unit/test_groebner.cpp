#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/groebner.hpp"
#include "pointfree/ring.hpp"

using namespace pointfree;

namespace {

// Leading term of a nonzero polynomial under the given order, found by a
// plain scan so it does not depend on the library's internal term layout.
PolyTerm lead(const RingPtr& R, const Value& v, MonomialOrder ord) {
  const Poly& p = R->as_poly(v);
  REQUIRE(!p.empty());
  const PolyTerm* best = &p.front();
  for (const auto& t : p)
    if (mono_greater(t.mono, best->mono, ord)) best = &t;
  return *best;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    out.exps[i] = std::max(a.exps[i], b.exps[i]);
  return out;
}

Value mono_value(const RingPtr& R, const Monomial& m) {
  return R->from_poly(Poly{PolyTerm{m, Rat(1)}});
}

Value scalar_value(const RingPtr& R, const Rat& c) {
  Monomial one;
  one.exps.assign(R->variables().size(), 0);
  return R->from_poly(Poly{PolyTerm{one, c}});
}

// Cross-multiplied S-polynomial: lc(g)*(L/lm(f))*f - lc(f)*(L/lm(g))*g.
// Scaling by nonzero field constants does not change whether the result
// reduces to zero, and it avoids coefficient inversion in the oracle.
Value s_poly(const RingPtr& R, const Value& f, const Value& g, MonomialOrder ord) {
  PolyTerm lf = lead(R, f, ord);
  PolyTerm lg = lead(R, g, ord);
  Monomial L = mono_lcm(lf.mono, lg.mono);
  Monomial mf = L, mg = L;
  for (std::size_t i = 0; i < L.exps.size(); ++i) {
    mf.exps[i] -= lf.mono.exps[i];
    mg.exps[i] -= lg.mono.exps[i];
  }
  Value left = R->mul(R->mul(f, mono_value(R, mf)), scalar_value(R, lg.coeff));
  Value right = R->mul(R->mul(g, mono_value(R, mg)), scalar_value(R, lf.coeff));
  return R->sub(left, right);
}

std::vector<std::string> basis_strings(const RingPtr& R, const std::vector<Value>& basis) {
  std::vector<std::string> out;
  for (const auto& v : basis) out.push_back(R->str(v));
  return out;
}

// Every property the docs promise of the output: monic generators, tails
// fully reduced against the other leading monomials, leading monomials
// strictly descending, all input generators and all S-polynomials reducing
// to zero.
void check_is_reduced_basis(const RingPtr& R, const std::vector<Value>& gens,
                            const std::vector<Value>& basis, MonomialOrder ord) {
  for (const auto& g : gens) CHECK(R->is_zero(normal_form(R, g, basis, ord)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    PolyTerm li = lead(R, basis[i], ord);
    CHECK(li.coeff == Rat(1));
    if (i + 1 < basis.size())
      CHECK(mono_greater(li.mono, lead(R, basis[i + 1], ord).mono, ord));
    for (const auto& term : R->as_poly(basis[i])) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j == i) continue;
        CHECK_FALSE(mono_divides(lead(R, basis[j], ord).mono, term.mono));
      }
    }
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Value s = s_poly(R, basis[i], basis[j], ord);
      CHECK(R->is_zero(normal_form(R, s, basis, ord)));
    }
  }
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("monomial order comparisons") {
    Monomial x2{{2, 0}}, xy{{1, 1}}, y2{{0, 2}}, x{{1, 0}}, y3{{0, 3}};
    // Both orders rank variables by declaration position.
    CHECK(mono_greater(x2, xy, MonomialOrder::lex));
    CHECK(mono_greater(x2, xy, MonomialOrder::grevlex));
    CHECK(mono_greater(xy, y2, MonomialOrder::grevlex));
    // Total degree decides first under grevlex, never under lex.
    CHECK(mono_greater(y3, x, MonomialOrder::grevlex));
    CHECK(mono_greater(x, y3, MonomialOrder::lex));
    CHECK_FALSE(mono_greater(xy, xy, MonomialOrder::lex));
    CHECK_FALSE(mono_greater(xy, xy, MonomialOrder::grevlex));

    CHECK(monomial_order_from_string("lex") == MonomialOrder::lex);
    CHECK(monomial_order_from_string("grevlex") == MonomialOrder::grevlex);
    CHECK_THROWS_AS((void)monomial_order_from_string("degrevlex"), InputError);
  }

  TEST_CASE("normal form reduces step by step") {
    auto R = Ring::polynomial(Ring::rationals(), {"x", "y"});
    std::vector<Value> basis{R->parse("x - y")};
    CHECK(R->str(normal_form(R, R->parse("x^2"), basis, MonomialOrder::lex)) == "y^2");
    CHECK(R->str(normal_form(R, R->parse("x*y + 1"), basis, MonomialOrder::lex)) ==
          "y^2 + 1");
    // Already reduced inputs come back unchanged.
    Value f = R->parse("y^3 - 2");
    CHECK(normal_form(R, f, basis, MonomialOrder::lex) == f);
    CHECK(R->is_zero(normal_form(R, R->zero(), basis, MonomialOrder::lex)));
  }

  TEST_CASE("lex basis eliminates x from {x*y - 1, y^2 - 1}") {
    auto R = Ring::polynomial(Ring::rationals(), {"x", "y"});
    std::vector<Value> gens{R->parse("x*y - 1"), R->parse("y^2 - 1")};
    auto basis = groebner_basis(R, gens, MonomialOrder::lex);
    CHECK(basis_strings(R, basis) == std::vector<std::string>{"x - y", "y^2 - 1"});
    check_is_reduced_basis(R, gens, basis, MonomialOrder::lex);
  }

  TEST_CASE("grevlex basis for {x^2 + y, x*y + x}") {
    auto R = Ring::polynomial(Ring::rationals(), {"x", "y"});
    std::vector<Value> gens{R->parse("x^2 + y"), R->parse("x*y + x")};
    auto basis = groebner_basis(R, gens, MonomialOrder::grevlex);
    CHECK(basis_strings(R, basis) ==
          std::vector<std::string>{"x^2 + y", "x*y + x", "y^2 + y"});
    check_is_reduced_basis(R, gens, basis, MonomialOrder::grevlex);
  }

  TEST_CASE("coefficients in a prime field") {
    auto R = Ring::polynomial(Ring::prime_field(2), {"x", "y"});
    std::vector<Value> gens{R->parse("x^2 + y^2"), R->parse("x + y")};
    auto basis = groebner_basis(R, gens, MonomialOrder::lex);
    // x^2 + y^2 = (x + y)^2 in characteristic 2.
    CHECK(basis_strings(R, basis) == std::vector<std::string>{"x + y"});
    check_is_reduced_basis(R, gens, basis, MonomialOrder::lex);
  }

  TEST_CASE("reduced basis does not depend on generator order or scaling") {
    auto R = Ring::polynomial(Ring::rationals(), {"x", "y"});
    std::vector<Value> gens{R->parse("x^2 - y"), R->parse("x*y - 1")};
    auto a = groebner_basis(R, gens, MonomialOrder::lex);
    auto b = groebner_basis(R, {gens[1], gens[0]}, MonomialOrder::lex);
    auto c = groebner_basis(
        R, {R->mul(R->from_int(3), gens[0]), R->neg(gens[1])}, MonomialOrder::lex);
    CHECK(a == b);
    CHECK(a == c);
    check_is_reduced_basis(R, gens, a, MonomialOrder::lex);
  }

  TEST_CASE("unit ideal collapses to one") {
    auto R = Ring::polynomial(Ring::rationals(), {"x"});
    auto basis = groebner_basis(R, {R->parse("x + 1"), R->parse("x")}, MonomialOrder::lex);
    CHECK(basis_strings(R, basis) == std::vector<std::string>{"1"});
  }

  TEST_CASE("zero generators are dropped") {
    auto R = Ring::polynomial(Ring::rationals(), {"x"});
    auto basis = groebner_basis(R, {R->zero(), R->parse("2*x")}, MonomialOrder::lex);
    CHECK(basis_strings(R, basis) == std::vector<std::string>{"x"});
    CHECK(groebner_basis(R, {R->zero()}, MonomialOrder::lex).empty());
    CHECK(groebner_basis(R, {}, MonomialOrder::lex).empty());
  }

  TEST_CASE("random ideals satisfy the Buchberger criterion") {
    auto R = Ring::polynomial(Ring::rationals(), {"x", "y"});
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    std::uniform_int_distribution<int> nterms(1, 3);
    auto random_poly = [&] {
      Value acc = R->zero();
      int n = nterms(rng);
      for (int t = 0; t < n; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        Monomial m{{expo(rng), expo(rng)}};
        acc = R->add(acc, R->mul(scalar_value(R, Rat(c)), mono_value(R, m)));
      }
      return acc;
    };
    for (int iter = 0; iter < 40; ++iter) {
      std::vector<Value> gens{random_poly(), random_poly()};
      for (auto ord : {MonomialOrder::lex, MonomialOrder::grevlex}) {
        auto basis = groebner_basis(R, gens, ord);
        check_is_reduced_basis(R, gens, basis, ord);
      }
    }
  }

  TEST_CASE("non-polynomial rings are rejected") {
    auto Z = Ring::integers();
    CHECK_THROWS_AS((void)groebner_basis(Z, {Z->from_int(2)}, MonomialOrder::lex),
                    InputError);
    CHECK_THROWS_AS(
        (void)normal_form(Z, Z->from_int(2), {Z->from_int(3)}, MonomialOrder::lex),
        InputError);
  }
}
