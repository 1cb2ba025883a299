#include "pointfree/term.hpp"

#include <algorithm>
#include <set>

namespace pointfree {

namespace {

// True iff a ⊆ b for sorted vectors.
bool subset_of(const LatticeTerm::Clause& a, const LatticeTerm::Clause& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

LatticeTerm LatticeTerm::top() {
  LatticeTerm t;
  t.clauses_.push_back({});
  return t;
}

LatticeTerm LatticeTerm::var(const std::string& name) {
  LatticeTerm t;
  t.clauses_.push_back({name});
  return t;
}

LatticeTerm LatticeTerm::clause(Clause names) {
  return join_of({std::move(names)});
}

LatticeTerm LatticeTerm::join_of(std::vector<Clause> clauses) {
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  // Absorption: drop any clause that strictly contains another clause.
  // (Duplicates are already gone, so j ⊆ i with i ≠ j is strict.)
  std::vector<Clause> kept;
  for (size_t i = 0; i < clauses.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < clauses.size() && !dominated; ++j) {
      if (i != j && subset_of(clauses[j], clauses[i])) dominated = true;
    }
    if (!dominated) kept.push_back(clauses[i]);
  }
  LatticeTerm t;
  t.clauses_ = std::move(kept);
  return t;
}

LatticeTerm LatticeTerm::meet(const LatticeTerm& other) const {
  std::vector<Clause> out;
  out.reserve(clauses_.size() * other.clauses_.size());
  for (const auto& a : clauses_) {
    for (const auto& b : other.clauses_) {
      Clause c = a;
      c.insert(c.end(), b.begin(), b.end());
      out.push_back(std::move(c));
    }
  }
  return join_of(std::move(out));
}

LatticeTerm LatticeTerm::join(const LatticeTerm& other) const {
  std::vector<Clause> out = clauses_;
  out.insert(out.end(), other.clauses_.begin(), other.clauses_.end());
  return join_of(std::move(out));
}

bool LatticeTerm::eval(const std::function<bool(const std::string&)>& valuation) const {
  for (const auto& c : clauses_) {
    bool all = true;
    for (const auto& g : c) {
      if (!valuation(g)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

LatticeTerm LatticeTerm::flip() const {
  // Read the DNF as a CNF of the opposite lattice and distribute back to
  // DNF: pick one generator from every clause, in all possible ways.
  if (is_bottom()) return top();   // empty meet of the opposite lattice
  std::vector<Clause> picks = {{}};
  for (const auto& c : clauses_) {
    std::vector<Clause> next;
    next.reserve(picks.size() * std::max<size_t>(c.size(), 1));
    for (const auto& p : picks) {
      for (const auto& g : c) {
        Clause q = p;
        q.push_back(g);
        next.push_back(std::move(q));
      }
    }
    picks = std::move(next);
    if (picks.empty()) break;  // a clause was empty: the flip is bottom
  }
  return join_of(std::move(picks));
}

std::vector<std::string> LatticeTerm::names() const {
  std::set<std::string> s;
  for (const auto& c : clauses_)
    for (const auto& g : c) s.insert(g);
  return {s.begin(), s.end()};
}

std::string LatticeTerm::str() const {
  if (is_bottom()) return "0";
  if (is_top()) return "1";
  std::string out;
  for (size_t i = 0; i < clauses_.size(); ++i) {
    if (i) out += " | ";
    const auto& c = clauses_[i];
    if (c.empty()) {
      out += "1";
      continue;
    }
    bool paren = clauses_.size() > 1 && c.size() > 1;
    if (paren) out += "(";
    for (size_t j = 0; j < c.size(); ++j) {
      if (j) out += " & ";
      out += c[j];
    }
    if (paren) out += ")";
  }
  return out;
}

}  // namespace pointfree
