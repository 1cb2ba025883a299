#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/ring.hpp"

using namespace pointfree;

namespace {

// Reference for radical membership over ZZ: f ∈ √(g) iff g divides a small
// power of f.  Powers up to 32 are far more than enough for |g| ≤ 10^6.
bool brute_radical_zz(long long f, long long g) {
  Int big_g(g);
  if (big_g == 0) return f == 0;
  Int p(1);
  for (int k = 1; k <= 32; ++k) {
    p *= f;
    if (p % big_g == 0) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("integer and rational basics") {
    RingPtr Z = Ring::integers();
    CHECK(Z->str(Z->parse("2*3 + 4^2 - 1")) == "21");
    CHECK(Z->str(Z->neg(Z->from_int(5))) == "-5");
    CHECK(Z->is_unit(Z->from_int(-1)));
    CHECK_FALSE(Z->is_unit(Z->from_int(2)));
    CHECK(Z->str(Z->gcd(Z->from_int(-12), Z->from_int(18))) == "6");
    auto x = Z->xgcd(Z->from_int(12), Z->from_int(18));
    CHECK(Z->str(Z->add(Z->mul(x.u, Z->from_int(12)), Z->mul(x.v, Z->from_int(18)))) ==
          Z->str(x.g));
    CHECK(Z->str(x.g) == "6");
    CHECK_FALSE(Z->div_exact(Z->from_int(7), Z->from_int(2)).has_value());
    CHECK(Z->str(*Z->div_exact(Z->from_int(-8), Z->from_int(2))) == "-4");
    CHECK(Z->str(Z->canonical_associate(Z->from_int(-7))) == "7");

    RingPtr Q = Ring::rationals();
    Value half = Q->parse("1/2");
    CHECK(Q->str(Q->add(half, Q->parse("1/3"))) == "5/6");
    CHECK(Q->is_unit(half));
    CHECK(Q->str(*Q->inverse(Q->parse("-2/7"))) == "-7/2");
    CHECK_THROWS_AS(Q->parse("1/0"), InputError);
  }

  TEST_CASE("modular rings") {
    RingPtr Z6 = Ring::integers_mod(6);
    CHECK(Z6->str(Z6->parse("4+5")) == "3");
    CHECK(Z6->is_unit(Z6->from_int(5)));
    CHECK_FALSE(Z6->is_unit(Z6->from_int(2)));
    CHECK_FALSE(Z6->is_domain());

    RingPtr F7 = Ring::prime_field(7);
    CHECK(F7->is_field());
    CHECK(F7->str(*F7->inverse(F7->from_int(3))) == "5");  // 3*5 = 15 = 1
    CHECK(F7->str(F7->parse("3/2")) == "5");               // 3 * 2^{-1} = 3*4
    CHECK_THROWS_AS(Ring::prime_field(6), InputError);
    CHECK_THROWS_AS(Ring::integers_mod(1), InputError);
  }

  TEST_CASE("polynomial arithmetic and parsing") {
    RingPtr R = Ring::polynomial(Ring::rationals(), {"x", "y"});
    Value f = R->parse("(x+y)^2");
    CHECK(R->str(f) == "x^2 + 2*x*y + y^2");
    CHECK(R->str(R->sub(f, R->parse("x^2+2*x*y+y^2"))) == "0");
    CHECK(R->is_unit(R->parse("5")));
    CHECK_FALSE(R->is_unit(R->parse("x")));
    CHECK_THROWS_AS(R->parse("z+1"), InputError);
    CHECK_THROWS_AS(R->parse("x++y"), InputError);
    CHECK_THROWS_AS(Ring::polynomial(Ring::integers(), {"x"}), InputError);

    // str/parse round trip on assorted shapes
    for (const char* s : {"0", "1", "-1", "x", "x - y", "x^3 - 2*x + 1/2",
                          "x^2*y + x*y^2", "-x*y"}) {
      CHECK(R->str(R->parse(s)) == s);
    }

    RingPtr U = Ring::polynomial(Ring::rationals(), {"x"});
    CHECK(U->is_pid());
    CHECK(U->str(U->gcd(U->parse("x^2-1"), U->parse("x^2-2*x+1"))) == "x - 1");
    CHECK(U->str(U->canonical_associate(U->parse("2*x+2"))) == "x + 1");
    CHECK_FALSE(R->is_pid());
  }

  TEST_CASE("localizations flatten and reduce") {
    RingPtr Z = Ring::integers();
    auto L6 = localize(Z, Z->from_int(6));
    CHECK_FALSE(L6.was_unit);
    RingPtr R = L6.ring;
    CHECK(R->kind() == RingKind::localization);
    // 1/3 has no representation over 6^0, so the sum stays written as 2/6.
    CHECK(R->str(R->parse("1/6 + 1/6")) == "2/6");
    CHECK(R->is_one(R->mul(R->parse("1/2"), R->from_int(2))));
    CHECK(R->is_unit(R->from_int(-4)));
    CHECK_FALSE(R->is_unit(R->from_int(5)));

    // Localizing again collapses into one layer over the base.
    auto L30 = localize(R, R->from_int(5));
    CHECK(L30.ring->kind() == RingKind::localization);
    CHECK(L30.ring->localization_base()->kind() == RingKind::integers);
    CHECK(L30.ring->is_unit(L30.ring->from_int(30)));

    auto again = localize(R, R->from_int(4));
    CHECK(again.was_unit);
    CHECK(again.ring->equals(*R));

    CHECK(localize(Ring::rationals(), Ring::rationals()->parse("7")).was_unit);
    CHECK_THROWS_AS(localize(Z, Z->zero()), InputError);

    RingPtr U = Ring::polynomial(Ring::rationals(), {"t"});
    RingPtr Ut = localize(U, U->parse("t")).ring;
    CHECK(Ut->str(Ut->parse("(t^2+t)/t")) == "t + 1");
    CHECK(Ut->str(Ut->parse("1/t^2")) == "1/t^2");
  }

  TEST_CASE("ring maps validate and apply") {
    RingPtr Z = Ring::integers();
    RingPtr Z6 = Ring::integers_mod(6);
    RingPtr Z3 = Ring::integers_mod(3);
    RingHom proj = make_hom(Z, Z6, {});
    CHECK(Z6->str(apply_hom(proj, Z->from_int(10))) == "4");
    CHECK_NOTHROW(make_hom(Z6, Z3, {}));           // 6 = 0 holds mod 3
    CHECK_THROWS_AS(make_hom(Z6, Ring::integers_mod(4), {}), InputError);

    RingPtr R = Ring::polynomial(Ring::rationals(), {"x"});
    RingPtr S = Ring::polynomial(Ring::rationals(), {"y", "z"});
    RingHom sub = make_hom(R, S, {{"x", S->parse("y+z")}});
    CHECK(S->str(apply_hom(sub, R->parse("x^2-1"))) == "y^2 + 2*y*z + z^2 - 1");
    CHECK_THROWS_AS(make_hom(R, S, {}), InputError);  // x has no image

    // A localized source insists on its inverted element mapping to a unit.
    RingPtr Zhalf = localize(Z, Z->from_int(2)).ring;
    RingHom to_f3 = make_hom(Zhalf, Z3, {});
    CHECK(Z3->str(apply_hom(to_f3, Zhalf->parse("1/2"))) == "2");  // 2*2 = 1 mod 3
    CHECK_THROWS_AS(make_hom(Zhalf, Ring::integers_mod(4), {}), InputError);
  }

  TEST_CASE("coercions") {
    RingPtr Z = Ring::integers();
    RingPtr Zhalf = localize(Z, Z->from_int(2)).ring;
    auto two = Z->coerce_into(Z->from_int(2), *Zhalf);
    REQUIRE(two.has_value());
    CHECK(Zhalf->is_unit(*two));
    CHECK_FALSE(Z->coerce_into(Z->from_int(2), *Ring::prime_field(5)).has_value());
  }

  TEST_CASE("radical membership over ZZ matches the power oracle") {
    RingPtr Z = Ring::integers();
    for (long long f = -30; f <= 30; ++f) {
      for (long long g = -30; g <= 30; ++g) {
        CAPTURE(f);
        CAPTURE(g);
        CHECK(radical_member(Z, Z->from_int(f), {Z->from_int(g)}) == brute_radical_zz(f, g));
      }
    }
    // multi-generator lists reduce to the gcd
    CHECK(radical_member(Z, Z->from_int(2), {Z->from_int(6), Z->from_int(10)}));
    CHECK_FALSE(radical_member(Z, Z->from_int(3), {Z->from_int(6), Z->from_int(10)}));
    CHECK(radical_member(Z, Z->from_int(1), {Z->from_int(2), Z->from_int(3)}));
  }

  TEST_CASE("radical membership in quotients, fields, and localizations") {
    RingPtr Z12 = Ring::integers_mod(12);
    CHECK(radical_member(Z12, Z12->from_int(6), {Z12->zero()}));   // 6^2 = 36 = 0
    CHECK_FALSE(radical_member(Z12, Z12->from_int(3), {Z12->zero()}));
    CHECK(radical_member(Z12, Z12->from_int(3), {Z12->from_int(9)}));

    RingPtr Q = Ring::rationals();
    CHECK(radical_member(Q, Q->zero(), {Q->zero()}));
    CHECK_FALSE(radical_member(Q, Q->from_int(5), {Q->zero()}));
    CHECK(radical_member(Q, Q->from_int(5), {Q->zero(), Q->from_int(3)}));

    RingPtr U = Ring::polynomial(Q, {"x"});
    CHECK(radical_member(U, U->parse("x"), {U->parse("x^2")}));
    CHECK_FALSE(radical_member(U, U->parse("x+1"), {U->parse("x^2")}));
    CHECK(radical_member(U, U->parse("x^2-1"), {U->parse("(x-1)*(x+1)^3")}));

    RingPtr Zhalf = localize(Ring::integers(), Ring::integers()->from_int(2)).ring;
    CHECK_FALSE(radical_member(Zhalf, Zhalf->from_int(2), {Zhalf->from_int(3)}));
    CHECK(radical_member(Zhalf, Zhalf->from_int(6), {Zhalf->from_int(3)}));
    // 1/2 is a unit, and √(6) = √(3) here is proper, so a unit stays out.
    CHECK_FALSE(radical_member(Zhalf, Zhalf->parse("1/2"), {Zhalf->from_int(6)}));
  }

  TEST_CASE("multivariate radical membership") {
    RingPtr R = Ring::polynomial(Ring::rationals(), {"x", "y"});
    CHECK(radical_member(R, R->parse("x+y"), {R->parse("x^2"), R->parse("y^2")}));
    CHECK(radical_member(R, R->parse("x*y"), {R->parse("x^2*y^3")}));
    CHECK_FALSE(radical_member(R, R->parse("x"), {R->parse("y")}));
    CHECK(radical_member(R, R->parse("1"), {R->parse("x"), R->parse("x-1")}));
  }

  TEST_CASE("division-safe random identities") {
    RingPtr Z = Ring::integers();
    std::mt19937 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
      long long a = static_cast<long long>(rng() % 201) - 100;
      long long b = static_cast<long long>(rng() % 201) - 100;
      Value va = Z->from_int(a), vb = Z->from_int(b);
      Value g = Z->gcd(va, vb);
      if (!Z->is_zero(g)) {
        CHECK(Z->divides(g, va));
        CHECK(Z->divides(g, vb));
      }
      auto x = Z->xgcd(va, vb);
      CHECK(Z->str(Z->add(Z->mul(x.u, va), Z->mul(x.v, vb))) == Z->str(x.g));
      CHECK(Z->str(Z->mul(Z->unit_part(va), Z->canonical_associate(va))) == Z->str(va));
    }
  }
}
