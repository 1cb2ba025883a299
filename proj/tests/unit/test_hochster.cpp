#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "pointfree/hochster.hpp"

using namespace pointfree;

namespace {

DLatticePresentation chain_ab() {
  return DLatticePresentation::with_relations(
      {"a", "b"}, {{LatticeTerm::var("a"), LatticeTerm::var("b")}});
}

LatticeTerm rand_term(std::mt19937& rng, const std::vector<std::string>& gens) {
  std::vector<LatticeTerm::Clause> clauses;
  std::size_t n = rng() % 3;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeTerm::Clause c;
    for (std::size_t j = 0, m = 1 + rng() % 2; j < m; ++j) {
      c.push_back(gens[rng() % gens.size()]);
    }
    clauses.push_back(std::move(c));
  }
  return LatticeTerm::join_of(std::move(clauses));
}

}  // namespace

TEST_SUITE("hochster") {
  TEST_CASE("dual flips the order") {
    auto L = chain_ab();
    auto D = dual_lattice(L);
    CHECK(D.orientation() == DLatticePresentation::Orientation::opposite);
    CHECK(entails(L, LatticeTerm::var("a"), LatticeTerm::var("b")));
    CHECK(entails(D, LatticeTerm::var("b"), LatticeTerm::var("a")));
    CHECK_FALSE(entails(D, LatticeTerm::var("a"), LatticeTerm::var("b")));
  }

  TEST_CASE("double dual restores entailment") {
    std::mt19937 rng(201);
    for (int iter = 0; iter < 60; ++iter) {
      std::vector<std::string> gens;
      for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
        gens.push_back(std::string(1, char('a' + i)));
      }
      std::vector<DLatticePresentation::Relation> rels;
      for (std::size_t i = 0, n = rng() % 4; i < n; ++i) {
        rels.emplace_back(rand_term(rng, gens), rand_term(rng, gens));
      }
      auto L = DLatticePresentation::with_relations(gens, rels);
      CHECK(double_dual_check(L));

      auto DD = dual_lattice(dual_lattice(L));
      CHECK(DD.orientation() == DLatticePresentation::Orientation::original);
      LatticeTerm x = rand_term(rng, gens);
      LatticeTerm y = rand_term(rng, gens);
      CHECK(entails(L, x, y) == entails(DD, x, y));
    }
  }

  TEST_CASE("dual points pair up by complement") {
    auto L = chain_ab();
    auto pairs = dual_points(L);
    REQUIRE(pairs.size() == points(L).size());
    std::set<std::vector<bool>> dual_values;
    for (const auto& [orig, flipped] : pairs) {
      REQUIRE(orig.values.size() == flipped.values.size());
      for (std::size_t i = 0; i < orig.values.size(); ++i) {
        CHECK(flipped.values[i] == !orig.values[i]);
      }
      dual_values.insert(flipped.values);
    }
    CHECK(dual_values.size() == pairs.size());  // a bijection, not a multimap

    // Same count on the dual side, computed directly.
    CHECK(points(dual_lattice(L)).size() == points(L).size());
  }

  TEST_CASE("oracle-mode duality stays lazy") {
    int calls = 0;
    auto oracle = DLatticePresentation::with_oracle(
        {"a", "b"}, [&calls](const LatticeTerm& l, const LatticeTerm& r) {
          ++calls;
          return l == r || l.is_bottom() || r.is_top();
        });
    auto D = dual_lattice(oracle);
    CHECK(D.oracle_mode());
    // A query against the dual forwards the flipped terms in swapped order,
    // so the old "anything ≤ top" clause now answers for the new bottom.
    CHECK(entails(D, LatticeTerm::bottom(), LatticeTerm::var("a")));
    CHECK(entails(D, LatticeTerm::var("a"), LatticeTerm::var("a")));
    CHECK_FALSE(entails(D, LatticeTerm::var("a"), LatticeTerm::var("b")));
    CHECK(calls > 0);
  }
}
