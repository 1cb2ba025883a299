#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pointfree {

/** A term of a bounded distributive lattice, kept in antichain disjunctive
 * normal form: a join of meets of generator names, where
 *
 *   - each clause (meet) is a sorted, duplicate-free list of names,
 *   - no clause contains another (absorption: a ∨ (a ∧ b) = a),
 *   - clauses are sorted lexicographically.
 *
 * Under this normal form two terms denote the same monotone boolean
 * function iff they are structurally equal, which makes the form canonical
 * for the *free* lattice.  Under relations, equality is entailment in both
 * directions (see lattice.hpp).
 *
 * The empty join is bottom; the join containing one empty meet is top.
 */
class LatticeTerm {
 public:
  using Clause = std::vector<std::string>;

  LatticeTerm() = default;  // bottom

  static LatticeTerm bottom() { return LatticeTerm(); }
  static LatticeTerm top();
  static LatticeTerm var(const std::string& name);
  /** Meet of a list of generators (top when empty). */
  static LatticeTerm clause(Clause names);
  /** Normalizes an arbitrary clause list into antichain DNF. */
  static LatticeTerm join_of(std::vector<Clause> clauses);

  bool is_bottom() const { return clauses_.empty(); }
  bool is_top() const { return clauses_.size() == 1 && clauses_[0].empty(); }

  const std::vector<Clause>& clauses() const { return clauses_; }

  LatticeTerm meet(const LatticeTerm& other) const;
  LatticeTerm join(const LatticeTerm& other) const;

  /** Evaluates in {0,1} under a generator valuation. */
  bool eval(const std::function<bool(const std::string&)>& valuation) const;

  /** Swaps the roles of meet and join (the term read in the opposite
   * lattice), re-normalized to DNF by distributing. */
  LatticeTerm flip() const;

  /** All generator names occurring in the term, sorted. */
  std::vector<std::string> names() const;

  /** Renders like "(a ∧ b) ∨ c" with ASCII connectives: "(a & b) | c".
   * Bottom renders as "0", top as "1". */
  std::string str() const;

  bool operator==(const LatticeTerm& other) const { return clauses_ == other.clauses_; }
  bool operator!=(const LatticeTerm& other) const { return clauses_ != other.clauses_; }
  bool operator<(const LatticeTerm& other) const { return clauses_ < other.clauses_; }

 private:
  std::vector<Clause> clauses_;
};

}  // namespace pointfree
