#include "pointfree/complexes.hpp"

#include <algorithm>
#include <utility>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

void require_ring(const RingPtr& r, const char* where) {
  if (!r) throw InputError(std::string(where) + ": missing ring");
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!a || !b || !a->equals(*b)) {
    throw InputError(std::string(where) + ": operands live in different rings");
  }
}

}  // namespace

std::size_t ChainComplex::rank_at(int n) const {
  if (n < lo || n > hi) return 0;
  return ranks[static_cast<std::size_t>(n - lo)];
}

Matrix ChainComplex::diff(int n) const {
  auto it = diffs.find(n);
  if (it != diffs.end()) return it->second;
  return Matrix::zero(ring, rank_at(n - 1), rank_at(n));
}

ChainComplex make_complex(RingPtr ring, int lo, int hi, std::vector<std::size_t> ranks,
                          std::map<int, Matrix> diffs) {
  require_ring(ring, "make_complex");
  if (lo > hi) throw InputError("make_complex: empty degree range");
  if (ranks.size() != static_cast<std::size_t>(hi - lo + 1)) {
    throw InputError("make_complex: rank list does not match the degree range");
  }
  ChainComplex c{std::move(ring), lo, hi, std::move(ranks), {}};
  for (auto& [n, m] : diffs) {
    if (n <= lo || n > hi) {
      throw InputError("make_complex: differential outside the degree range at degree " +
                       std::to_string(n));
    }
    require_same_ring(c.ring, m.ring, "make_complex");
    if (m.rows != c.rank_at(n - 1) || m.cols != c.rank_at(n)) {
      throw InputError("make_complex: differential shape mismatch at degree " +
                       std::to_string(n));
    }
    if (!m.is_zero()) c.diffs.emplace(n, std::move(m));
  }
  for (int n = lo + 1; n < hi; ++n) {
    if (!mat_mul(c.diff(n), c.diff(n + 1)).is_zero()) {
      throw InputError("make_complex: differentials do not compose to zero at degree " +
                       std::to_string(n + 1));
    }
  }
  return c;
}

ChainComplex unit_complex(const RingPtr& ring) {
  return make_complex(ring, 0, 0, {1}, {});
}

ChainComplex free_module_complex(const RingPtr& ring, int degree) {
  return make_complex(ring, degree, degree, {1}, {});
}

ChainComplex koszul(const RingPtr& ring, const std::vector<Value>& gens, const Caps& caps) {
  require_ring(ring, "koszul");
  if (gens.size() > caps.covering_elements) {
    throw CapacityError("koszul: more than " + std::to_string(caps.covering_elements) +
                        " elements");
  }
  ChainComplex c = unit_complex(ring);
  for (const auto& g : gens) {
    Matrix d = Matrix::zero(ring, 1, 1);
    d.at(0, 0) = g;
    ChainComplex two = make_complex(ring, 0, 1, {1, 1}, {{1, d}});
    c = tensor_product(c, two);
  }
  return c;
}

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a.ring, b.ring, "tensor_product");
  const RingPtr& R = a.ring;
  int lo = a.lo + b.lo;
  int hi = a.hi + b.hi;

  auto rank_of = [&](int n) {
    std::size_t r = 0;
    for (int p = a.lo; p <= a.hi; ++p) r += a.rank_at(p) * b.rank_at(n - p);
    return r;
  };
  auto offset_of = [&](int n, int p) {
    std::size_t off = 0;
    for (int t = a.lo; t < p; ++t) off += a.rank_at(t) * b.rank_at(n - t);
    return off;
  };

  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(rank_of(n));

  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix m = Matrix::zero(R, rank_of(n - 1), rank_of(n));
    for (int p = a.lo; p <= a.hi; ++p) {
      int q = n - p;
      std::size_t sA = a.rank_at(p);
      std::size_t sB = b.rank_at(q);
      if (sA == 0 || sB == 0) continue;
      std::size_t src = offset_of(n, p);
      if (a.rank_at(p - 1) > 0) {  // d_A ⊗ id into the (p-1, q) block
        Matrix dA = a.diff(p);
        std::size_t tgt = offset_of(n - 1, p - 1);
        for (std::size_t ti = 0; ti < dA.rows; ++ti) {
          for (std::size_t i = 0; i < sA; ++i) {
            const Value& e = dA.at(ti, i);
            if (R->is_zero(e)) continue;
            for (std::size_t j = 0; j < sB; ++j) {
              m.at(tgt + ti * sB + j, src + i * sB + j) = e;
            }
          }
        }
      }
      std::size_t sB1 = b.rank_at(q - 1);
      if (sB1 > 0) {  // (-1)^p id ⊗ d_B into the (p, q-1) block
        Matrix dB = b.diff(q);
        bool negate = (p % 2 != 0);
        std::size_t tgt = offset_of(n - 1, p);
        for (std::size_t tj = 0; tj < sB1; ++tj) {
          for (std::size_t j = 0; j < sB; ++j) {
            const Value& e = dB.at(tj, j);
            if (R->is_zero(e)) continue;
            Value signed_e = negate ? R->neg(e) : e;
            for (std::size_t i = 0; i < sA; ++i) {
              m.at(tgt + i * sB1 + tj, src + i * sB + j) = signed_e;
            }
          }
        }
      }
    }
    diffs.emplace(n, std::move(m));
  }
  return make_complex(R, lo, hi, std::move(ranks), std::move(diffs));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a.ring, b.ring, "direct_sum");
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.hi, b.hi);
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(a.rank_at(n) + b.rank_at(n));
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix dA = a.diff(n);
    Matrix dB = b.diff(n);
    Matrix m = Matrix::zero(a.ring, dA.rows + dB.rows, dA.cols + dB.cols);
    for (std::size_t r = 0; r < dA.rows; ++r) {
      for (std::size_t c = 0; c < dA.cols; ++c) m.at(r, c) = dA.at(r, c);
    }
    for (std::size_t r = 0; r < dB.rows; ++r) {
      for (std::size_t c = 0; c < dB.cols; ++c) m.at(dA.rows + r, dA.cols + c) = dB.at(r, c);
    }
    diffs.emplace(n, std::move(m));
  }
  return make_complex(a.ring, lo, hi, std::move(ranks), std::move(diffs));
}

ChainComplex suspend(const ChainComplex& c, int k) {
  std::map<int, Matrix> diffs;
  bool negate = (k % 2 != 0);
  for (const auto& [n, m] : c.diffs) {
    diffs.emplace(n + k, negate ? mat_neg(m) : m);
  }
  return make_complex(c.ring, c.lo + k, c.hi + k, c.ranks, std::move(diffs));
}

Matrix ChainMap::component(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return Matrix::zero(to.ring, to.rank_at(n), from.rank_at(n));
}

ChainMap make_chain_map(ChainComplex from, ChainComplex to, std::map<int, Matrix> components) {
  require_same_ring(from.ring, to.ring, "make_chain_map");
  ChainMap f{std::move(from), std::move(to), {}};
  for (auto& [n, m] : components) {
    require_same_ring(f.to.ring, m.ring, "make_chain_map");
    if (m.rows != f.to.rank_at(n) || m.cols != f.from.rank_at(n)) {
      throw InputError("make_chain_map: component shape mismatch at degree " +
                       std::to_string(n));
    }
    if (!m.is_zero()) f.components.emplace(n, std::move(m));
  }
  int lo = std::min(f.from.lo, f.to.lo);
  int hi = std::max(f.from.hi, f.to.hi);
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix lhs = mat_mul(f.to.diff(n), f.component(n));
    Matrix rhs = mat_mul(f.component(n - 1), f.from.diff(n));
    if (!mat_equal(lhs, rhs)) {
      throw InputError("make_chain_map: squares do not commute at degree " +
                       std::to_string(n));
    }
  }
  return f;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& A = f.from;
  const ChainComplex& B = f.to;
  const RingPtr& R = A.ring;
  int lo = std::min(A.lo + 1, B.lo);
  int hi = std::max(A.hi + 1, B.hi);
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(A.rank_at(n - 1) + B.rank_at(n));
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    std::size_t ra = A.rank_at(n - 1), rb = B.rank_at(n);
    std::size_t ta = A.rank_at(n - 2), tb = B.rank_at(n - 1);
    Matrix m = Matrix::zero(R, ta + tb, ra + rb);
    Matrix dA = A.diff(n - 1);
    for (std::size_t r = 0; r < ta; ++r) {
      for (std::size_t c = 0; c < ra; ++c) m.at(r, c) = R->neg(dA.at(r, c));
    }
    Matrix fc = f.component(n - 1);
    for (std::size_t r = 0; r < tb; ++r) {
      for (std::size_t c = 0; c < ra; ++c) m.at(ta + r, c) = R->neg(fc.at(r, c));
    }
    Matrix dB = B.diff(n);
    for (std::size_t r = 0; r < tb; ++r) {
      for (std::size_t c = 0; c < rb; ++c) m.at(ta + r, ra + c) = dB.at(r, c);
    }
    diffs.emplace(n, std::move(m));
  }
  return make_complex(R, lo, hi, std::move(ranks), std::move(diffs));
}

std::string ModulePresentation::str() const {
  if (is_zero_module()) return "0";
  std::string out;
  if (free_rank == 1) {
    out = "R";
  } else if (free_rank > 1) {
    out = "R^" + std::to_string(free_rank);
  }
  for (const auto& d : divisors) {
    if (!out.empty()) out += " + ";
    out += "R/(" + ring->str(d) + ")";
  }
  return out;
}

bool modules_isomorphic(const ModulePresentation& a, const ModulePresentation& b) {
  require_same_ring(a.ring, b.ring, "modules_isomorphic");
  return a.free_rank == b.free_rank && a.divisors == b.divisors;
}

ModulePresentation homology(const ChainComplex& c, int n) {
  require_ring(c.ring, "homology");
  if (!c.ring->is_pid()) {
    throw InputError("homology: the coefficient ring must be a PID");
  }
  std::size_t cn = c.rank_at(n);
  if (cn == 0) return ModulePresentation{c.ring, 0, {}};

  // Kernel of d_n, as columns of V past the rank of d_n.
  Matrix A = c.diff(n);
  SnfResult sa = smith_normal_form(A);
  std::size_t rank_a = sa.divisors.size();
  std::size_t k = cn - rank_a;  // dim of the kernel
  if (k == 0) return ModulePresentation{c.ring, 0, {}};

  // Relations: image of d_{n+1} expressed in kernel coordinates.  In the
  // V-basis the kernel is spanned by the last k coordinates, so Vinv * B
  // must vanish in the first rank_a rows and the rest is the relation
  // matrix.
  Matrix B = c.diff(n + 1);
  Matrix Y = mat_mul(sa.Vinv, B);
  for (std::size_t r = 0; r < rank_a; ++r) {
    for (std::size_t col = 0; col < Y.cols; ++col) {
      if (!c.ring->is_zero(Y.at(r, col))) {
        throw Error("homology: image is not contained in the kernel");
      }
    }
  }
  Matrix X = Matrix::zero(c.ring, k, Y.cols);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t col = 0; col < Y.cols; ++col) X.at(r, col) = Y.at(rank_a + r, col);
  }
  SnfResult sx = smith_normal_form(X);
  ModulePresentation out{c.ring, k - sx.divisors.size(), {}};
  for (const auto& d : sx.divisors) {
    if (!c.ring->is_unit(d)) out.divisors.push_back(d);
  }
  return out;
}

bool is_I_torsion(const ChainComplex& c, const std::vector<Value>& gens) {
  std::vector<Value> zero_ideal{c.ring->zero()};
  for (int n = c.lo; n <= c.hi; ++n) {
    ModulePresentation h = homology(c, n);
    if (h.free_rank > 0) {
      for (const auto& g : gens) {
        if (!radical_member(c.ring, g, zero_ideal)) return false;
      }
    }
    for (const auto& d : h.divisors) {
      std::vector<Value> principal{d};
      for (const auto& g : gens) {
        if (!radical_member(c.ring, g, principal)) return false;
      }
    }
  }
  return true;
}

bool is_f_invertible(const ChainComplex& c, const Value& f) {
  for (int n = c.lo; n <= c.hi; ++n) {
    ModulePresentation h = homology(c, n);
    if (h.free_rank > 0 && !c.ring->is_unit(f)) return false;
    for (const auto& d : h.divisors) {
      if (!c.ring->is_unit(c.ring->gcd(f, d))) return false;
    }
  }
  return true;
}

RadicalIdeal supph(const ChainComplex& c) {
  bool any_free = false;
  std::vector<Value> divisors;
  for (int n = c.lo; n <= c.hi; ++n) {
    ModulePresentation h = homology(c, n);
    if (h.free_rank > 0) any_free = true;
    divisors.insert(divisors.end(), h.divisors.begin(), h.divisors.end());
  }
  if (any_free) return zar_bottom(c.ring);  // annihilator is zero
  if (divisors.empty()) return zar_top(c.ring);
  Value prod = c.ring->one();
  for (const auto& d : divisors) prod = c.ring->mul(prod, d);
  return zar_support(c.ring, prod);
}

LatticeOpen loc_invariant(const ChainComplex& c) { return hochster_open(supph(c)); }

bool cellular_equiv(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a.ring, b.ring, "cellular_equiv");
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.hi, b.hi);
  for (int n = lo; n <= hi; ++n) {
    if (!modules_isomorphic(homology(a, n), homology(b, n))) return false;
  }
  return true;
}

ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a.ring, b.ring, "hom_complex");
  const RingPtr& R = a.ring;
  int lo = b.lo - a.hi;
  int hi = b.hi - a.lo;

  // Degree n holds ⊕_p Hom(A_p, B_{p+n}); blocks ordered by p ascending,
  // and Hom(A_p, B_q) carries the basis E_{uv} ordered source-major
  // (index = v * rank(B_q) + u).
  auto rank_of = [&](int n) {
    std::size_t r = 0;
    for (int p = a.lo; p <= a.hi; ++p) r += a.rank_at(p) * b.rank_at(p + n);
    return r;
  };
  auto offset_of = [&](int n, int p) {
    std::size_t off = 0;
    for (int t = a.lo; t < p; ++t) off += a.rank_at(t) * b.rank_at(t + n);
    return off;
  };

  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(rank_of(n));

  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix m = Matrix::zero(R, rank_of(n - 1), rank_of(n));
    bool extra_negate = (n % 2 == 0);  // the sign -(-1)^n on the φ∘d_A term
    for (int p = a.lo; p <= a.hi; ++p) {
      int q = p + n;
      std::size_t sA = a.rank_at(p);
      std::size_t sB = b.rank_at(q);
      if (sA == 0 || sB == 0) continue;
      std::size_t src = offset_of(n, p);
      std::size_t tB = b.rank_at(q - 1);
      if (tB > 0) {  // d_B ∘ φ lands in Hom(A_p, B_{q-1})
        Matrix dB = b.diff(q);
        std::size_t tgt = offset_of(n - 1, p);
        for (std::size_t w = 0; w < tB; ++w) {
          for (std::size_t u = 0; u < sB; ++u) {
            const Value& e = dB.at(w, u);
            if (R->is_zero(e)) continue;
            for (std::size_t v = 0; v < sA; ++v) {
              m.at(tgt + v * tB + w, src + v * sB + u) = e;
            }
          }
        }
      }
      std::size_t tA = a.rank_at(p + 1);
      if (tA > 0) {  // -(-1)^n φ ∘ d_A lands in Hom(A_{p+1}, B_q)
        Matrix dA = a.diff(p + 1);
        std::size_t tgt = offset_of(n - 1, p + 1);
        for (std::size_t v = 0; v < sA; ++v) {
          for (std::size_t z = 0; z < tA; ++z) {
            const Value& e = dA.at(v, z);
            if (R->is_zero(e)) continue;
            Value signed_e = extra_negate ? R->neg(e) : e;
            for (std::size_t u = 0; u < sB; ++u) {
              m.at(tgt + z * sB + u, src + v * sB + u) = signed_e;
            }
          }
        }
      }
    }
    diffs.emplace(n, std::move(m));
  }
  return make_complex(R, lo, hi, std::move(ranks), std::move(diffs));
}

namespace {

ChainComplex base_change(const ChainComplex& c, const RingPtr& target) {
  std::map<int, Matrix> diffs;
  for (const auto& [n, m] : c.diffs) {
    Matrix t = Matrix::zero(target, m.rows, m.cols);
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
      auto coerced = c.ring->coerce_into(m.entries[i], *target);
      if (!coerced) {
        throw InputError("derived_hom_groups: no canonical map between the two rings");
      }
      t.entries[i] = *coerced;
    }
    diffs.emplace(n, std::move(t));
  }
  return make_complex(target, c.lo, c.hi, c.ranks, std::move(diffs));
}

}  // namespace

std::map<int, ModulePresentation> derived_hom_groups(const ChainComplex& a,
                                                     const ChainComplex& b) {
  ChainComplex source = a;
  if (!a.ring->equals(*b.ring)) source = base_change(a, b.ring);
  ChainComplex h = hom_complex(source, b);
  std::map<int, ModulePresentation> out;
  for (int n = h.lo; n <= h.hi; ++n) out.emplace(n, homology(h, n));
  return out;
}

}  // namespace pointfree
