#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pointfree/term.hpp"

using namespace pointfree;

namespace {

// Independent semantics: a random expression tree evaluated directly,
// against which the normal form is checked.
struct Expr {
  enum Kind { var, meet, join, top, bottom } kind;
  std::string name;
  std::shared_ptr<Expr> l, r;
};

using ExprPtr = std::shared_ptr<Expr>;

ExprPtr make_var(std::string n) {
  return std::make_shared<Expr>(Expr{Expr::var, std::move(n), nullptr, nullptr});
}

ExprPtr make_node(Expr::Kind k, ExprPtr l, ExprPtr r) {
  return std::make_shared<Expr>(Expr{k, "", std::move(l), std::move(r)});
}

bool eval_expr(const Expr& e, const std::map<std::string, bool>& v) {
  switch (e.kind) {
    case Expr::var: return v.at(e.name);
    case Expr::meet: return eval_expr(*e.l, v) && eval_expr(*e.r, v);
    case Expr::join: return eval_expr(*e.l, v) || eval_expr(*e.r, v);
    case Expr::top: return true;
    case Expr::bottom: return false;
  }
  return false;
}

LatticeTerm to_term(const Expr& e) {
  switch (e.kind) {
    case Expr::var: return LatticeTerm::var(e.name);
    case Expr::meet: return to_term(*e.l).meet(to_term(*e.r));
    case Expr::join: return to_term(*e.l).join(to_term(*e.r));
    case Expr::top: return LatticeTerm::top();
    case Expr::bottom: return LatticeTerm::bottom();
  }
  return LatticeTerm::bottom();
}

ExprPtr random_expr(std::mt19937& rng, const std::vector<std::string>& gens, int depth) {
  unsigned pick = rng() % (depth <= 0 ? 3u : 10u);
  if (pick < 1) return make_node(Expr::top, nullptr, nullptr);
  if (pick < 2) return make_node(Expr::bottom, nullptr, nullptr);
  if (pick < 3 || depth <= 0) return make_var(gens[rng() % gens.size()]);
  Expr::Kind k = rng() % 2 ? Expr::meet : Expr::join;
  return make_node(k, random_expr(rng, gens, depth - 1), random_expr(rng, gens, depth - 1));
}

std::vector<bool> truth_table(const std::function<bool(const std::map<std::string, bool>&)>& f,
                              const std::vector<std::string>& gens) {
  std::vector<bool> table;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < gens.size(); ++i) v[gens[i]] = (mask >> i) & 1;
    table.push_back(f(v));
  }
  return table;
}

std::vector<bool> term_table(const LatticeTerm& t, const std::vector<std::string>& gens) {
  return truth_table(
      [&t](const std::map<std::string, bool>& v) {
        return t.eval([&v](const std::string& n) { return v.at(n); });
      },
      gens);
}

bool is_antichain_dnf(const LatticeTerm& t) {
  const auto& cs = t.clauses();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 1; j < cs[i].size(); ++j) {
      if (!(cs[i][j - 1] < cs[i][j])) return false;  // sorted, no duplicates
    }
    if (i > 0 && !(cs[i - 1] < cs[i])) return false;  // clause list sorted
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      if (std::includes(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end())) {
        return false;  // absorption violated
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("term") {
  TEST_CASE("normal form is canonical for the free lattice") {
    const std::vector<std::string> gens{"a", "b", "c"};
    std::mt19937 rng(20260815);
    for (int iter = 0; iter < 400; ++iter) {
      ExprPtr e1 = random_expr(rng, gens, 4);
      ExprPtr e2 = random_expr(rng, gens, 4);
      LatticeTerm t1 = to_term(*e1);
      LatticeTerm t2 = to_term(*e2);

      auto table1 = truth_table([&](const auto& v) { return eval_expr(*e1, v); }, gens);
      auto table2 = truth_table([&](const auto& v) { return eval_expr(*e2, v); }, gens);

      CHECK(term_table(t1, gens) == table1);  // eval agrees with the tree
      CHECK(term_table(t2, gens) == table2);
      CHECK((t1 == t2) == (table1 == table2));  // structural equality = semantics
      CHECK(is_antichain_dnf(t1));
      CHECK(is_antichain_dnf(t2));
    }
  }

  TEST_CASE("absorption and bounds") {
    LatticeTerm a = LatticeTerm::var("a");
    LatticeTerm ab = LatticeTerm::clause({"a", "b"});

    CHECK(a.join(ab) == a);          // a | (a & b) = a
    CHECK(a.meet(ab) == ab);         // a & (a & b) = a & b
    CHECK(a.join(LatticeTerm::bottom()) == a);
    CHECK(a.meet(LatticeTerm::bottom()).is_bottom());
    CHECK(a.join(LatticeTerm::top()).is_top());
    CHECK(a.meet(LatticeTerm::top()) == a);
    CHECK(LatticeTerm::clause({}) == LatticeTerm::top());
    CHECK(LatticeTerm::join_of({}) == LatticeTerm::bottom());
    CHECK(LatticeTerm::join_of({{"b", "a", "b"}}) == LatticeTerm::clause({"a", "b"}));
  }

  TEST_CASE("rendering") {
    CHECK(LatticeTerm::bottom().str() == "0");
    CHECK(LatticeTerm::top().str() == "1");
    CHECK(LatticeTerm::var("a").str() == "a");
    LatticeTerm t = LatticeTerm::clause({"a", "b"}).join(LatticeTerm::var("c"));
    CHECK(t.str() == "(a & b) | c");
  }

  TEST_CASE("flip swaps meet and join") {
    LatticeTerm t = LatticeTerm::clause({"a", "b"}).join(LatticeTerm::var("c"));
    // (a & b) | c read upside down is (a | b) & c = (a & c) | (b & c).
    LatticeTerm expected = LatticeTerm::join_of({{"a", "c"}, {"b", "c"}});
    CHECK(t.flip() == expected);
    CHECK(LatticeTerm::top().flip() == LatticeTerm::bottom());
    CHECK(LatticeTerm::bottom().flip() == LatticeTerm::top());

    std::mt19937 rng(7);
    const std::vector<std::string> gens{"a", "b", "c"};
    for (int iter = 0; iter < 100; ++iter) {
      LatticeTerm t1 = to_term(*random_expr(rng, gens, 4));
      CHECK(t1.flip().flip() == t1);  // involution
    }
  }

  TEST_CASE("names are collected sorted") {
    LatticeTerm t = LatticeTerm::join_of({{"c", "b"}, {"a"}});
    CHECK(t.names() == std::vector<std::string>{"a", "b", "c"});
  }
}
