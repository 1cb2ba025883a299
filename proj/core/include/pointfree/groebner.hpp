#pragma once

#include <vector>

#include "pointfree/ring.hpp"

namespace pointfree {

enum class MonomialOrder { grevlex, lex };

MonomialOrder monomial_order_from_string(const std::string& s);

/** True when a > b in the given order (variables ranked by their position
 * in the ring's declaration). */
bool mono_greater(const Monomial& a, const Monomial& b, MonomialOrder order);

/** Fully reduces f modulo the given polynomials. */
Value normal_form(const RingPtr& ring, const Value& f, const std::vector<Value>& basis,
                  MonomialOrder order);

/** Reduced Groebner basis (monic generators, tails reduced), sorted with
 * leading monomials descending.  Buchberger with the coprimality pair
 * criterion; intended for small instances. */
std::vector<Value> groebner_basis(const RingPtr& ring, const std::vector<Value>& gens,
                                  MonomialOrder order);

}  // namespace pointfree
