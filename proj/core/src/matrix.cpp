#include "pointfree/matrix.hpp"

#include "pointfree/errors.hpp"

namespace pointfree {

Matrix Matrix::zero(RingPtr r, std::size_t rows, std::size_t cols) {
  Matrix m;
  m.ring = std::move(r);
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(rows * cols, m.ring->zero());
  return m;
}

Matrix Matrix::identity(RingPtr r, std::size_t n) {
  Matrix m = zero(std::move(r), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ring->one();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries)
    if (!ring->is_zero(e)) return false;
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw Error("matrix shape mismatch in product");
  Matrix out = Matrix::zero(a.ring, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.ring->is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        out.at(i, j) = a.ring->add(out.at(i, j), a.ring->mul(a.at(i, k), b.at(k, j)));
    }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error("matrix shape mismatch in sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    out.entries[i] = a.ring->add(a.entries[i], b.entries[i]);
  return out;
}

Matrix mat_neg(const Matrix& a) {
  Matrix out = a;
  for (auto& e : out.entries) e = a.ring->neg(e);
  return out;
}

Matrix mat_hstack(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw Error("matrix shape mismatch in hstack");
  Matrix out = Matrix::zero(a.ring, a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) out.at(i, a.cols + j) = b.at(i, j);
  }
  return out;
}

Matrix mat_vstack(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw Error("matrix shape mismatch in vstack");
  Matrix out = Matrix::zero(a.ring, a.rows + b.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(a.rows + i, j) = b.at(i, j);
  return out;
}

bool mat_equal(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!(a.entries[i] == b.entries[i])) return false;
  return true;
}

namespace {

// Working state maintaining the invariant U * M * V = D throughout, with
// Uinv and Vinv kept in lockstep.
struct SnfWork {
  const Ring& R;
  Matrix U, D, V, Uinv, Vinv;

  explicit SnfWork(const Matrix& m)
      : R(*m.ring),
        U(Matrix::identity(m.ring, m.rows)),
        D(m),
        V(Matrix::identity(m.ring, m.cols)),
        Uinv(Matrix::identity(m.ring, m.rows)),
        Vinv(Matrix::identity(m.ring, m.cols)) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols; ++j) std::swap(D.at(a, j), D.at(b, j));
    for (std::size_t j = 0; j < U.cols; ++j) std::swap(U.at(a, j), U.at(b, j));
    for (std::size_t i = 0; i < Uinv.rows; ++i) std::swap(Uinv.at(i, a), Uinv.at(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows; ++i) std::swap(D.at(i, a), D.at(i, b));
    for (std::size_t i = 0; i < V.rows; ++i) std::swap(V.at(i, a), V.at(i, b));
    for (std::size_t j = 0; j < Vinv.cols; ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
  }

  // row_a -= q * row_b  (elementary)
  void row_axpy(std::size_t a, std::size_t b, const Value& q) {
    for (std::size_t j = 0; j < D.cols; ++j)
      D.at(a, j) = R.sub(D.at(a, j), R.mul(q, D.at(b, j)));
    for (std::size_t j = 0; j < U.cols; ++j)
      U.at(a, j) = R.sub(U.at(a, j), R.mul(q, U.at(b, j)));
    for (std::size_t i = 0; i < Uinv.rows; ++i)
      Uinv.at(i, b) = R.add(Uinv.at(i, b), R.mul(q, Uinv.at(i, a)));
  }

  // col_a -= q * col_b
  void col_axpy(std::size_t a, std::size_t b, const Value& q) {
    for (std::size_t i = 0; i < D.rows; ++i)
      D.at(i, a) = R.sub(D.at(i, a), R.mul(q, D.at(i, b)));
    for (std::size_t i = 0; i < V.rows; ++i)
      V.at(i, a) = R.sub(V.at(i, a), R.mul(q, V.at(i, b)));
    for (std::size_t j = 0; j < Vinv.cols; ++j)
      Vinv.at(b, j) = R.add(Vinv.at(b, j), R.mul(q, Vinv.at(a, j)));
  }

  // Left-multiply rows (a, b) by [[u, v], [-y/g, x/g]] where u*x + v*y = g;
  // the transform has determinant 1.  Afterwards D.at(a, pivot_col) = g.
  void row_bezout(std::size_t a, std::size_t b, const Value& x, const Value& y) {
    auto e = R.xgcd(x, y);
    Value p = *R.div_exact(x, e.g);
    Value q = *R.div_exact(y, e.g);
    apply_row_2x2(a, b, e.u, e.v, R.neg(q), p);
  }

  void col_bezout(std::size_t a, std::size_t b, const Value& x, const Value& y) {
    auto e = R.xgcd(x, y);
    Value p = *R.div_exact(x, e.g);
    Value q = *R.div_exact(y, e.g);
    apply_col_2x2(a, b, e.u, e.v, R.neg(q), p);
  }

  // rows (a,b) <- [[m00, m01], [m10, m11]] * rows (a,b); det must be a unit
  // (it is 1 for the Bezout transform); the explicit inverse keeps Uinv exact.
  void apply_row_2x2(std::size_t a, std::size_t b, const Value& m00, const Value& m01,
                     const Value& m10, const Value& m11) {
    Value det = R.sub(R.mul(m00, m11), R.mul(m01, m10));
    Value dinv = *R.inverse(det);
    auto upd = [&](Matrix& M, bool cols_of) {
      if (!cols_of) {
        for (std::size_t j = 0; j < M.cols; ++j) {
          Value ra = M.at(a, j), rb = M.at(b, j);
          M.at(a, j) = R.add(R.mul(m00, ra), R.mul(m01, rb));
          M.at(b, j) = R.add(R.mul(m10, ra), R.mul(m11, rb));
        }
      } else {
        // right-multiply columns (a,b) by the inverse transform
        for (std::size_t i = 0; i < M.rows; ++i) {
          Value ca = M.at(i, a), cb = M.at(i, b);
          M.at(i, a) = R.mul(dinv, R.sub(R.mul(ca, m11), R.mul(cb, m10)));
          M.at(i, b) = R.mul(dinv, R.sub(R.mul(cb, m00), R.mul(ca, m01)));
        }
      }
    };
    upd(D, false);
    upd(U, false);
    upd(Uinv, true);
  }

  void apply_col_2x2(std::size_t a, std::size_t b, const Value& m00, const Value& m01,
                     const Value& m10, const Value& m11) {
    Value det = R.sub(R.mul(m00, m11), R.mul(m01, m10));
    Value dinv = *R.inverse(det);
    // D <- D * T where T acts on columns (a,b): col_a' = m00*col_a + m01*col_b
    auto upd_cols = [&](Matrix& M) {
      for (std::size_t i = 0; i < M.rows; ++i) {
        Value ca = M.at(i, a), cb = M.at(i, b);
        M.at(i, a) = R.add(R.mul(m00, ca), R.mul(m01, cb));
        M.at(i, b) = R.add(R.mul(m10, ca), R.mul(m11, cb));
      }
    };
    upd_cols(D);
    upd_cols(V);
    for (std::size_t j = 0; j < Vinv.cols; ++j) {
      Value ra = Vinv.at(a, j), rb = Vinv.at(b, j);
      Vinv.at(a, j) = R.mul(dinv, R.sub(R.mul(m11, ra), R.mul(m10, rb)));
      Vinv.at(b, j) = R.mul(dinv, R.sub(R.mul(m00, rb), R.mul(m01, ra)));
    }
  }

  void scale_row(std::size_t a, const Value& unit) {
    Value uinv = *R.inverse(unit);
    for (std::size_t j = 0; j < D.cols; ++j) D.at(a, j) = R.mul(unit, D.at(a, j));
    for (std::size_t j = 0; j < U.cols; ++j) U.at(a, j) = R.mul(unit, U.at(a, j));
    for (std::size_t i = 0; i < Uinv.rows; ++i) Uinv.at(i, a) = R.mul(uinv, Uinv.at(i, a));
  }
};

}  // namespace

SnfResult smith_normal_form(const Matrix& m) {
  if (!m.ring) throw Error("matrix without a ring");
  if (!m.ring->is_pid())
    throw InputError("Smith normal form requires a principal ideal domain");
  const Ring& R = *m.ring;
  SnfWork w(m);
  std::size_t n = std::min(m.rows, m.cols);

  for (std::size_t t = 0; t < n; ++t) {
    // pivot: smallest nonzero norm, ties in row-major order
    std::size_t pr = t, pc = t;
    Int best = -1;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j) {
        if (R.is_zero(w.D.at(i, j))) continue;
        Int nm = R.pivot_norm(w.D.at(i, j));
        if (best < 0 || nm < best) {
          best = nm;
          pr = i;
          pc = j;
        }
      }
    if (best < 0) break;  // rest of the matrix is zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    bool dirty = true;
    std::size_t rounds = 0;
    while (dirty) {
      if (++rounds > 10000) throw CapacityError("Smith reduction did not settle");
      dirty = false;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        const Value& x = w.D.at(i, t);
        if (R.is_zero(x)) continue;
        const Value& d = w.D.at(t, t);
        auto q = R.div_exact(x, d);
        if (q)
          w.row_axpy(i, t, *q);
        else {
          w.row_bezout(t, i, d, x);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        const Value& x = w.D.at(t, j);
        if (R.is_zero(x)) continue;
        const Value& d = w.D.at(t, t);
        auto q = R.div_exact(x, d);
        if (q) {
          w.col_axpy(j, t, *q);
          // a column combination can refill the column below the pivot
          for (std::size_t i = t + 1; i < m.rows; ++i)
            if (!R.is_zero(w.D.at(i, t))) dirty = true;
        } else {
          w.col_bezout(t, j, d, x);
          dirty = true;
        }
      }
      if (!dirty) {
        // ensure the pivot divides everything that remains
        for (std::size_t i = t + 1; i < m.rows && !dirty; ++i)
          for (std::size_t j = t + 1; j < m.cols && !dirty; ++j) {
            if (R.is_zero(w.D.at(i, j))) continue;
            if (!R.div_exact(w.D.at(i, j), w.D.at(t, t))) {
              w.row_axpy(t, i, R.neg(R.one()));  // row_t += row_i
              dirty = true;
            }
          }
      }
    }
  }

  // canonical diagonal
  for (std::size_t t = 0; t < n; ++t) {
    const Value& d = w.D.at(t, t);
    if (R.is_zero(d)) continue;
    Value u = R.unit_part(d);
    if (!R.is_one(u)) w.scale_row(t, *R.inverse(u));
  }

  SnfResult out{std::move(w.U), std::move(w.D), std::move(w.V),
                std::move(w.Uinv), std::move(w.Vinv), {}};
  for (std::size_t t = 0; t < n; ++t) {
    if (R.is_zero(out.D.at(t, t))) break;
    out.divisors.push_back(out.D.at(t, t));
  }
  return out;
}

}  // namespace pointfree
