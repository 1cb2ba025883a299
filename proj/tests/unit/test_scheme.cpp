#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/ring.hpp"
#include "pointfree/scheme.hpp"
#include "pointfree/zariski.hpp"

using namespace pointfree;

namespace {

Scheme spec_zz() {
  SchemeDatum d;
  d.pieces = {Ring::integers()};
  return glue(d);
}

// Two integer charts D(2) and D(3) overlapping in D(6).
Scheme two_charts() {
  auto Z = Ring::integers();
  SchemeDatum d;
  d.pieces = {localize(Z, Z->from_int(2)).ring, localize(Z, Z->from_int(3)).ring};
  RawGluing g;
  g.i = 0;
  g.j = 1;
  g.f_ij = d.pieces[0]->from_int(3);
  g.f_ji = d.pieces[1]->from_int(2);
  d.gluings = {g};
  return glue(d);
}

// The projective line over the rationals: two affine lines glued along
// t |-> 1/s.
SchemeDatum projective_line_datum() {
  auto Qt = Ring::polynomial(Ring::rationals(), {"t"});
  auto Qs = Ring::polynomial(Ring::rationals(), {"s"});
  RingPtr over_t = localize(Qt, Qt->parse("t")).ring;
  RingPtr over_s = localize(Qs, Qs->parse("s")).ring;
  SchemeDatum d;
  d.pieces = {Qt, Qs};
  RawGluing g;
  g.i = 0;
  g.j = 1;
  g.f_ij = Qt->parse("t");
  g.f_ji = Qs->parse("s");
  g.phi_images = {{"t", over_s->parse("1/s")}};
  g.phi_inv_images = {{"s", over_t->parse("1/t")}};
  d.gluings = {g};
  return d;
}

RadicalIdeal ideal_of(const RingPtr& R, long g) {
  return radical_ideal(R, {R->from_int(g)});
}

}  // namespace

TEST_SUITE("scheme") {
  TEST_CASE("gluing validation") {
    CHECK_NOTHROW((void)spec_zz());
    CHECK_NOTHROW((void)two_charts());
    CHECK_NOTHROW((void)glue(projective_line_datum()));

    SUBCASE("piece count limits") {
      SchemeDatum empty;
      CHECK_THROWS_AS((void)glue(empty), InputError);
      SchemeDatum four;
      for (int i = 0; i < 4; ++i) four.pieces.push_back(Ring::integers());
      CHECK_THROWS_AS((void)glue(four), InputError);
    }
    SUBCASE("gluing indices must name distinct pieces") {
      auto Z = Ring::integers();
      SchemeDatum d;
      d.pieces = {localize(Z, Z->from_int(2)).ring, localize(Z, Z->from_int(3)).ring};
      RawGluing g;
      g.i = 0;
      g.j = 5;
      g.f_ij = d.pieces[0]->from_int(3);
      g.f_ji = d.pieces[1]->from_int(2);
      d.gluings = {g};
      CHECK_THROWS_AS((void)glue(d), InputError);
      g.j = 0;
      d.gluings = {g};
      CHECK_THROWS_AS((void)glue(d), InputError);
    }
    SUBCASE("duplicate gluings are rejected") {
      auto Z = Ring::integers();
      SchemeDatum d;
      d.pieces = {localize(Z, Z->from_int(2)).ring, localize(Z, Z->from_int(3)).ring};
      RawGluing g;
      g.i = 0;
      g.j = 1;
      g.f_ij = d.pieces[0]->from_int(3);
      g.f_ji = d.pieces[1]->from_int(2);
      d.gluings = {g, g};
      CHECK_THROWS_AS((void)glue(d), InputError);
    }
    SUBCASE("transition maps must invert each other") {
      SchemeDatum d = projective_line_datum();
      // Sending t to s instead of 1/s is a ring map but not an inverse
      // of s -> 1/t.
      RingPtr over_s = localize(d.pieces[1], d.pieces[1]->parse("s")).ring;
      d.gluings[0].phi_images = {{"t", over_s->parse("s")}};
      CHECK_THROWS_AS((void)glue(d), InputError);
    }
    SUBCASE("three charts satisfy the cocycle identity") {
      auto Z = Ring::integers();
      SchemeDatum d;
      d.pieces = {localize(Z, Z->from_int(2)).ring, localize(Z, Z->from_int(3)).ring,
                  localize(Z, Z->from_int(5)).ring};
      RawGluing g01, g02, g12;
      g01.i = 0;
      g01.j = 1;
      g01.f_ij = d.pieces[0]->from_int(3);
      g01.f_ji = d.pieces[1]->from_int(2);
      g02.i = 0;
      g02.j = 2;
      g02.f_ij = d.pieces[0]->from_int(5);
      g02.f_ji = d.pieces[2]->from_int(2);
      g12.i = 1;
      g12.j = 2;
      g12.f_ij = d.pieces[1]->from_int(5);
      g12.f_ji = d.pieces[2]->from_int(3);
      d.gluings = {g01, g02, g12};
      Scheme s = glue(d);
      CHECK(s.pieces.size() == 3);
      GlobalSections sec = global_sections(s, 1);
      REQUIRE(sec.ring.has_value());
      CHECK((*sec.ring)->equals(*Z));
    }
  }

  TEST_CASE("opens of the glued space") {
    Scheme s = two_charts();
    const RingPtr& p0 = s.pieces[0];
    const RingPtr& p1 = s.pieces[1];
    GlobalOpen d5 = make_global_open(s, {ideal_of(p0, 5), ideal_of(p1, 5)});
    GlobalOpen d30 = make_global_open(s, {ideal_of(p0, 30), ideal_of(p1, 30)});
    CHECK(global_entails(s, d30, d5));
    CHECK_FALSE(global_entails(s, d5, d30));
    GlobalOpen met = global_meet(s, d5, d30);
    CHECK(global_entails(s, met, d30));
    CHECK(global_entails(s, d30, met));
    GlobalOpen joined = global_join(s, d5, d30);
    CHECK(global_entails(s, joined, d5));
    CHECK(global_entails(s, d5, joined));

    // Parts that disagree on the overlap are rejected; so are part lists
    // of the wrong shape or over the wrong ring.
    CHECK_THROWS_AS((void)make_global_open(s, {ideal_of(p0, 5), ideal_of(p1, 7)}),
                    InputError);
    CHECK_THROWS_AS((void)make_global_open(s, {ideal_of(p0, 5)}), InputError);
    CHECK_THROWS_AS(
        (void)make_global_open(s, {ideal_of(Ring::integers(), 5), ideal_of(p1, 5)}),
        InputError);
    // Parts only need to agree after restriction: 2 is a unit on piece 0
    // and on the overlap, so both of these restrict to the whole overlap.
    CHECK_NOTHROW((void)make_global_open(s, {ideal_of(p0, 2), ideal_of(p1, 2)}));
    // Likewise 15 and 5 cut the same open out of the overlap.
    CHECK_NOTHROW((void)make_global_open(s, {ideal_of(p0, 5), ideal_of(p1, 15)}));
    GlobalOpen mixed = make_global_open(s, {ideal_of(p0, 1), ideal_of(p1, 2)});
    CHECK(global_entails(s, mixed, mixed));
  }

  TEST_CASE("structure sheaf values and restrictions") {
    Scheme s = spec_zz();
    auto Z = Ring::integers();
    RingPtr at2 = structure_sheaf_value(s, 0, Z->from_int(2));
    CHECK(at2->kind() == RingKind::localization);
    CHECK(at2->equals(*localize(Z, Z->from_int(2)).ring));
    CHECK_THROWS_AS((void)structure_sheaf_value(s, 3, Z->from_int(2)), InputError);
    CHECK_THROWS_AS((void)structure_sheaf_value(s, 0, Z->zero()), InputError);

    RingHom res = restriction_map(s, 0, Z->from_int(2), Z->from_int(6));
    CHECK(res.source->equals(*localize(Z, Z->from_int(2)).ring));
    CHECK(res.target->equals(*localize(Z, Z->from_int(6)).ring));
    // 1/2 lands in ZZ[1/6] as 3/6: denominators are powers of the
    // inverted element.
    Value half = res.source->parse("1/2");
    Value moved = apply_hom(res, half);
    CHECK(res.target->str(moved) == "3/6");
    CHECK(res.target->is_one(res.target->mul(moved, res.target->from_int(2))));
    // D(3) is not inside D(2).
    CHECK_THROWS_AS((void)restriction_map(s, 0, Z->from_int(2), Z->from_int(3)),
                    InputError);

    Scheme charts = two_charts();
    RingPtr overlap = structure_sheaf_value(charts, 1, charts.pieces[1]->from_int(5));
    CHECK(overlap->kind() == RingKind::localization);
    CHECK(overlap->localization_base()->str(overlap->inverted_element()) == "15");
  }

  TEST_CASE("global sections") {
    SUBCASE("a single affine piece returns its own ring") {
      GlobalSections sec = global_sections(spec_zz(), 1);
      REQUIRE(sec.ring.has_value());
      CHECK((*sec.ring)->equals(*Ring::integers()));
    }
    SUBCASE("two charts of the integers glue to the integers") {
      GlobalSections sec = global_sections(two_charts(), 1);
      REQUIRE(sec.ring.has_value());
      CHECK((*sec.ring)->equals(*Ring::integers()));
    }
    SUBCASE("the projective line has only constants") {
      Scheme p1 = glue(projective_line_datum());
      for (unsigned bound : {2u, 4u, 7u}) {
        GlobalSections sec = global_sections(p1, bound);
        CHECK_FALSE(sec.ring.has_value());
        CHECK(sec.dimension == 1);
        CHECK(sec.stable);
      }
    }
    SUBCASE("a single affine line keeps its polynomials") {
      SchemeDatum d;
      d.pieces = {Ring::polynomial(Ring::rationals(), {"t"})};
      GlobalSections sec = global_sections(glue(d), 3);
      REQUIRE(sec.ring.has_value());
      CHECK((*sec.ring)->equals(*d.pieces[0]));
    }
    SUBCASE("disconnected and unsupported diagrams are rejected") {
      auto Z = Ring::integers();
      SchemeDatum d;
      d.pieces = {localize(Z, Z->from_int(2)).ring, localize(Z, Z->from_int(3)).ring};
      Scheme disconnected = glue(d);
      CHECK_THROWS_AS((void)global_sections(disconnected, 1), InputError);

      SchemeDatum mixed;
      mixed.pieces = {Ring::integers(), Ring::polynomial(Ring::rationals(), {"t"})};
      CHECK_THROWS_AS((void)global_sections(glue(mixed), 1), InputError);
    }
  }

  TEST_CASE("sheaf condition for principal covers") {
    auto Z = Ring::integers();
    SUBCASE("the standard cover of the whole space") {
      SheafCheckReport rep =
          sheaf_condition_check(Z, Z->one(), {Z->from_int(2), Z->from_int(3)});
      CHECK(rep.covers);
      CHECK(rep.descends);
      CHECK(rep.pass());
    }
    SUBCASE("a cover by a power of the same element") {
      SheafCheckReport rep = sheaf_condition_check(Z, Z->from_int(2), {Z->from_int(4)});
      CHECK(rep.covers);
      CHECK(rep.descends);
    }
    SUBCASE("non-covers are reported without a descent verdict") {
      SheafCheckReport rep =
          sheaf_condition_check(Z, Z->one(), {Z->from_int(2), Z->from_int(4)});
      CHECK_FALSE(rep.covers);
      CHECK_FALSE(rep.pass());
      // D(3) sticks out of D(2), so this is not a cover of D(2) either.
      SheafCheckReport out =
          sheaf_condition_check(Z, Z->from_int(2), {Z->from_int(2), Z->from_int(3)});
      CHECK_FALSE(out.covers);
    }
    SUBCASE("polynomial base") {
      auto Qx = Ring::polynomial(Ring::rationals(), {"x"});
      SheafCheckReport rep = sheaf_condition_check(
          Qx, Qx->parse("x"), {Qx->parse("x^2"), Qx->parse("x^3")});
      CHECK(rep.covers);
      CHECK(rep.descends);
      SheafCheckReport cover2 = sheaf_condition_check(
          Qx, Qx->one(), {Qx->parse("x"), Qx->parse("x - 1")});
      CHECK(cover2.pass());
    }
    SUBCASE("guards") {
      CHECK_THROWS_AS((void)sheaf_condition_check(Z, Z->one(), {}), InputError);
      CHECK_THROWS_AS((void)sheaf_condition_check(Z, Z->zero(), {Z->one()}), InputError);
      CHECK_THROWS_AS((void)sheaf_condition_check(Z, Z->one(), {Z->zero()}), InputError);
      auto Qxy = Ring::polynomial(Ring::rationals(), {"x", "y"});
      CHECK_THROWS_AS(
          (void)sheaf_condition_check(Qxy, Qxy->parse("x"), {Qxy->parse("x")}),
          InputError);
      CHECK_THROWS_AS((void)sheaf_condition_check(Ring::integers_mod(6), Z->one(),
                                                  {Z->from_int(2)}),
                      InputError);
    }
  }

  TEST_CASE("the cut-out-subscheme presheaf") {
    auto Z = Ring::integers();
    RingPtr v = domain_presheaf_value(Z, {Z->from_int(6), Z->from_int(10)});
    CHECK(v->kind() == RingKind::integers_mod);
    CHECK(v->modulus() == 2);
    CHECK(domain_presheaf_value(Z, {Z->zero()})->kind() == RingKind::integers);
    CHECK(domain_presheaf_value(Z, {})->kind() == RingKind::integers);
    CHECK(domain_presheaf_value(Z, {Z->from_int(8), Z->from_int(12)})->modulus() == 4);
    CHECK_THROWS_AS((void)domain_presheaf_value(Z, {Z->one()}), InputError);
    CHECK_THROWS_AS(
        (void)domain_presheaf_value(Z, {Z->from_int(2), Z->from_int(3)}), InputError);
    CHECK_THROWS_AS((void)domain_presheaf_value(Ring::rationals(), {}), InputError);

    // Over ZZ/n the modulus joins the ideal.
    auto Z12 = Ring::integers_mod(12);
    RingPtr w = domain_presheaf_value(Z12, {Z12->from_int(8)});
    CHECK(w->modulus() == 4);

    RingHom res = domain_presheaf_restriction(Z, {Z->from_int(6)}, {Z->from_int(2)});
    CHECK(res.source->modulus() == 6);
    CHECK(res.target->modulus() == 2);
    CHECK(res.target->str(apply_hom(res, res.source->from_int(5))) == "1");
    CHECK_THROWS_AS(
        (void)domain_presheaf_restriction(Z, {Z->from_int(2)}, {Z->from_int(3)}),
        InputError);
    // Restricting from the full space to a subscheme and to itself.
    RingHom down = domain_presheaf_restriction(Z, {Z->zero()}, {Z->from_int(2)});
    CHECK(down.source->kind() == RingKind::integers);
    CHECK_THROWS_AS(
        (void)domain_presheaf_restriction(Z, {Z->from_int(2)}, {Z->zero()}), InputError);
  }

  TEST_CASE("reconstruction round trip") {
    auto Z = Ring::integers();
    SUBCASE("the affine integers") {
      Scheme s = spec_zz();
      std::vector<std::vector<RadicalIdeal>> samples{{
          ideal_of(Z, 2),
          ideal_of(Z, 6),
          ideal_of(Z, 0),
          ideal_of(Z, 1),
          radical_ideal(Z, {Z->from_int(4), Z->from_int(10)}),
      }};
      ReconstructionReport rep = reconstruction_check(s, samples);
      CHECK(rep.pass);
      CHECK(rep.failures.empty());
    }
    SUBCASE("two charts with matching samples") {
      Scheme s = two_charts();
      std::vector<std::vector<RadicalIdeal>> samples{
          {ideal_of(s.pieces[0], 5), ideal_of(s.pieces[0], 15)},
          {ideal_of(s.pieces[1], 5), ideal_of(s.pieces[1], 10)},
      };
      ReconstructionReport rep = reconstruction_check(s, samples);
      CHECK(rep.pass);
      CHECK(rep.failures.empty());
    }
    SUBCASE("shape errors") {
      Scheme s = spec_zz();
      CHECK_THROWS_AS((void)reconstruction_check(s, {}), InputError);
      std::vector<std::vector<RadicalIdeal>> wrong{{ideal_of(Ring::rationals(), 2)}};
      CHECK_THROWS_AS((void)reconstruction_check(s, wrong), InputError);
    }
  }
}
