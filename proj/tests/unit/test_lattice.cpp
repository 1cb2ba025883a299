#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/lattice.hpp"

using namespace pointfree;

namespace {

// Reference decision procedure: walk every valuation explicitly, keep the
// ones satisfying all relations, and compare the two terms pointwise.
bool oracle_entails(const DLatticePresentation& L, const LatticeTerm& lhs,
                    const LatticeTerm& rhs) {
  const auto& gens = L.generators();
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < gens.size(); ++i) v[gens[i]] = (mask >> i) & 1;
    auto val = [&v](const std::string& n) { return v.at(n); };
    bool model = true;
    for (const auto& [l, r] : L.relations()) {
      if (l.eval(val) && !r.eval(val)) {
        model = false;
        break;
      }
    }
    if (model && lhs.eval(val) && !rhs.eval(val)) return false;
  }
  return true;
}

LatticeTerm random_term(std::mt19937& rng, const std::vector<std::string>& gens) {
  std::vector<LatticeTerm::Clause> clauses;
  std::size_t n_clauses = rng() % 3;
  for (std::size_t i = 0; i < n_clauses; ++i) {
    LatticeTerm::Clause c;
    std::size_t n_lits = 1 + rng() % gens.size();
    for (std::size_t j = 0; j < n_lits; ++j) c.push_back(gens[rng() % gens.size()]);
    clauses.push_back(std::move(c));
  }
  if (rng() % 8 == 0) clauses.push_back({});  // sprinkle in TOP
  return LatticeTerm::join_of(std::move(clauses));
}

DLatticePresentation random_presentation(std::mt19937& rng, std::size_t n_gens,
                                         std::size_t n_rels) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < n_gens; ++i) gens.push_back(std::string(1, char('a' + i)));
  std::vector<DLatticePresentation::Relation> rels;
  for (std::size_t i = 0; i < n_rels; ++i) {
    rels.emplace_back(random_term(rng, gens), random_term(rng, gens));
  }
  return DLatticePresentation::with_relations(gens, std::move(rels));
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("entailment agrees with explicit valuation search") {
    std::mt19937 rng(101);
    for (int iter = 0; iter < 200; ++iter) {
      auto L = random_presentation(rng, 1 + rng() % 3, rng() % 4);
      LatticeTerm a = random_term(rng, L.generators());
      LatticeTerm b = random_term(rng, L.generators());
      CAPTURE(a.str());
      CAPTURE(b.str());
      CHECK(entails(L, a, b) == oracle_entails(L, a, b));
      CHECK(lattice_eq(L, a, b) == (oracle_entails(L, a, b) && oracle_entails(L, b, a)));
    }
  }

  TEST_CASE("meet and join respect the presentation") {
    std::mt19937 rng(102);
    for (int iter = 0; iter < 100; ++iter) {
      auto L = random_presentation(rng, 1 + rng() % 3, rng() % 3);
      LatticeTerm a = random_term(rng, L.generators());
      LatticeTerm b = random_term(rng, L.generators());
      LatticeTerm c = random_term(rng, L.generators());

      CHECK(entails(L, term_meet(L, a, b), a));
      CHECK(entails(L, a, term_join(L, a, b)));
      // distributivity as normal forms
      CHECK(term_meet(L, a, term_join(L, b, c)) ==
            term_join(L, term_meet(L, a, b), term_meet(L, a, c)));
    }
  }

  TEST_CASE("points come out in lexicographic order") {
    auto free2 = DLatticePresentation::with_relations({"a", "b"}, {});
    auto pts = points(free2);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].values == std::vector<bool>{false, false});
    CHECK(pts[1].values == std::vector<bool>{false, true});
    CHECK(pts[2].values == std::vector<bool>{true, false});
    CHECK(pts[3].values == std::vector<bool>{true, true});
    CHECK(pts[2].value("a") == true);
    CHECK(pts[2].value("b") == false);

    auto chain = DLatticePresentation::with_relations(
        {"a", "b"}, {{LatticeTerm::var("a"), LatticeTerm::var("b")}});
    CHECK(points(chain).size() == 3);  // (0,0), (0,1), (1,1)
  }

  TEST_CASE("inconsistent relations leave no points") {
    auto L = DLatticePresentation::with_relations(
        {"a"}, {{LatticeTerm::top(), LatticeTerm::bottom()}});
    CHECK(points(L).empty());
    CHECK(entails(L, LatticeTerm::top(), LatticeTerm::bottom()));  // vacuously
    CHECK(birkhoff_roundtrip(L));  // the one-element lattice is fine
  }

  TEST_CASE("representation round trip on random presentations") {
    std::mt19937 rng(103);
    for (int iter = 0; iter < 60; ++iter) {
      auto L = random_presentation(rng, 1 + rng() % 3, rng() % 4);
      CHECK(birkhoff_roundtrip(L));
    }
  }

  TEST_CASE("normal-form universe sizes") {
    CHECK(term_universe({}).size() == 2);                    // 0, 1
    CHECK(term_universe({"a"}).size() == 3);                 // 0, a, 1
    CHECK(term_universe({"a", "b"}).size() == 6);
    CHECK(term_universe({"a", "b", "c"}).size() == 20);
    CHECK_THROWS_AS(term_universe({"a", "b", "c", "d", "e", "f"}), CapacityError);
  }

  TEST_CASE("precompiled model set answers like entails") {
    std::mt19937 rng(104);
    for (int iter = 0; iter < 50; ++iter) {
      auto L = random_presentation(rng, 1 + rng() % 3, rng() % 3);
      ModelSet ms = ModelSet::of(L);
      for (int q = 0; q < 10; ++q) {
        LatticeTerm a = random_term(rng, L.generators());
        LatticeTerm b = random_term(rng, L.generators());
        CHECK(ms.leq(a, b) == entails(L, a, b));
      }
    }
  }

  TEST_CASE("frame elements order like finite joins") {
    auto L = DLatticePresentation::with_relations({"a", "b"}, {});
    FrameElement ab{LatticeTerm::var("a"), LatticeTerm::var("b")};
    FrameElement joined{LatticeTerm::var("a").join(LatticeTerm::var("b"))};
    CHECK(frame_leq(L, ab, joined));
    CHECK(frame_leq(L, joined, ab));
    CHECK_FALSE(frame_leq(L, joined, FrameElement{LatticeTerm::var("a")}));
    CHECK(frame_leq(L, frame_meet(ab, joined), ab));
    CHECK(frame_leq(L, ab, frame_join(ab, joined)));
  }

  TEST_CASE("guard rails") {
    std::vector<std::string> many;
    for (int i = 0; i < 25; ++i) many.push_back("g" + std::to_string(i));
    auto big = DLatticePresentation::with_relations(many, {});
    CHECK_THROWS_AS(points(big), CapacityError);

    auto L = DLatticePresentation::with_relations({"a"}, {});
    CHECK_THROWS_AS(L.check_term(LatticeTerm::var("zz")), InputError);
    CHECK_THROWS_AS(normalize(L, LatticeTerm::var("zz")), InputError);

    auto oracle = DLatticePresentation::with_oracle(
        {"a"}, [](const LatticeTerm&, const LatticeTerm&) { return true; });
    CHECK_THROWS_AS(points(oracle), InputError);
    CHECK(entails(oracle, LatticeTerm::var("a"), LatticeTerm::bottom()));
  }
}
