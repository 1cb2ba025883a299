#pragma once

#include <map>
#include <string>
#include <vector>

#include "pointfree/caps.hpp"
#include "pointfree/matrix.hpp"
#include "pointfree/zariski.hpp"

namespace pointfree {

/** A bounded chain complex of finite free modules.  The degree-n
 * differential maps C_n to C_{n-1}; its matrix has rank(C_{n-1}) rows and
 * rank(C_n) columns and acts on column vectors.  All stored differentials
 * must compose to zero. */
struct ChainComplex {
  RingPtr ring;
  int lo = 0;
  int hi = 0;
  std::vector<std::size_t> ranks;  // ranks[n - lo] for lo <= n <= hi
  std::map<int, Matrix> diffs;     // d_n for those n with a nonzero matrix

  std::size_t rank_at(int n) const;
  /** The degree-n differential, materialized as a zero matrix if absent. */
  Matrix diff(int n) const;
};

/** Validates shapes and d∘d = 0. */
ChainComplex make_complex(RingPtr ring, int lo, int hi, std::vector<std::size_t> ranks,
                          std::map<int, Matrix> diffs);

/** R placed in degree zero. */
ChainComplex unit_complex(const RingPtr& ring);
/** R concentrated in the given degree. */
ChainComplex free_module_complex(const RingPtr& ring, int degree);

/** The Koszul complex on the given elements: the tensor product of the
 * two-term complexes R --g--> R (degrees 1 and 0), concentrated in degrees
 * 0..#gens.  Empty input gives the tensor unit. */
ChainComplex koszul(const RingPtr& ring, const std::vector<Value>& gens,
                    const Caps& caps = default_caps());

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
/** Degree shift by k; differentials pick up the sign (-1)^k. */
ChainComplex suspend(const ChainComplex& c, int k);

struct ChainMap {
  ChainComplex from;
  ChainComplex to;
  std::map<int, Matrix> components;  // degree -> rank(to_n) x rank(from_n)

  Matrix component(int n) const;
};

/** Validates shapes and commutation with the differentials. */
ChainMap make_chain_map(ChainComplex from, ChainComplex to,
                        std::map<int, Matrix> components);

/** Cone(f)_n = A_{n-1} ⊕ B_n with d(a, b) = (-d_A a, d_B b - f a). */
ChainComplex mapping_cone(const ChainMap& f);

/** A finitely generated module over a PID in invariant-factor form:
 * R^free_rank ⊕ R/(d_1) ⊕ … ⊕ R/(d_k) with each d_i a nonzero nonunit
 * canonical associate and d_i | d_{i+1}.  The form is unique, so equality
 * of presentations is isomorphism of modules. */
struct ModulePresentation {
  RingPtr ring;
  std::size_t free_rank = 0;
  std::vector<Value> divisors;

  bool is_zero_module() const { return free_rank == 0 && divisors.empty(); }
  /** "0", "R", "R^2 + R/(6)", ... */
  std::string str() const;
};

bool modules_isomorphic(const ModulePresentation& a, const ModulePresentation& b);

/** H_n = ker d_n / im d_{n+1}, via two Smith normal forms. */
ModulePresentation homology(const ChainComplex& c, int n);

/** All homology in all degrees is annihilated by a power of (gens):
 * every generator must be nilpotent modulo each invariant factor, and
 * nilpotent outright wherever free rank survives. */
bool is_I_torsion(const ChainComplex& c, const std::vector<Value>& gens);

/** Multiplication by f is invertible on all homology: f must be a unit
 * against every invariant factor, and a unit of the ring if free rank
 * survives anywhere. */
bool is_f_invertible(const ChainComplex& c, const Value& f);

/** The radical ideal cutting out the support of the total homology. */
RadicalIdeal supph(const ChainComplex& c);

/** supph packaged as an element of the dual (Hochster-ordered) lattice;
 * this is the complete invariant for the thick-subcategory order. */
LatticeOpen loc_invariant(const ChainComplex& c);

/** Degreewise isomorphism of homology. */
bool cellular_equiv(const ChainComplex& a, const ChainComplex& b);

/** Hom(A, B)_n = ⊕_p Hom(A_p, B_{p+n}), D(φ) = d_B φ - (-1)^n φ d_A. */
ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b);

/** Homology of Hom(A, B) in every degree.  Since all objects are bounded
 * complexes of free modules this computes the maps in the derived
 * category: degree n holds [A, B[n]] up to the usual shift convention.
 * When B lives over a localization of A's ring, A is base-changed first
 * (the localization is flat, so nothing is lost). */
std::map<int, ModulePresentation> derived_hom_groups(const ChainComplex& a,
                                                     const ChainComplex& b);

}  // namespace pointfree
