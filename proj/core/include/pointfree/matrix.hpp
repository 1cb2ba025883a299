#pragma once

#include <vector>

#include "pointfree/ring.hpp"

namespace pointfree {

/** Dense matrix over a ring, row-major. */
struct Matrix {
  RingPtr ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Value> entries;

  static Matrix zero(RingPtr r, std::size_t rows, std::size_t cols);
  static Matrix identity(RingPtr r, std::size_t n);

  Value& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Value& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool is_zero() const;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);
Matrix mat_hstack(const Matrix& a, const Matrix& b);
Matrix mat_vstack(const Matrix& a, const Matrix& b);
bool mat_equal(const Matrix& a, const Matrix& b);

/** U * M * V = D with U, V invertible (inverses returned) and D diagonal
 * with each diagonal entry dividing the next; diagonal entries are
 * canonical associates.  Pivots are chosen by smallest nonzero norm with
 * ties broken in row-major order.  Requires a PID. */
struct SnfResult {
  Matrix U, D, V, Uinv, Vinv;
  std::vector<Value> divisors;  // nonzero diagonal of D, in order
};

SnfResult smith_normal_form(const Matrix& m);

}  // namespace pointfree
