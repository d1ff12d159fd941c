#pragma once

#include <vector>

#include "torcone/rational.hpp"

namespace torcone {

using IntVector = std::vector<Integer>;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> entries; // row-major, rows*cols

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

  static IntMatrix identity(int n);

  Integer& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const Integer& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

  IntVector row(int i) const;
  IntVector col(int j) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntVector mul(const IntMatrix& a, const IntVector& v);
IntMatrix transpose(const IntMatrix& a);
IntMatrix from_rows(const std::vector<IntVector>& rows, int cols);

// Exact determinant, Bareiss fraction-free elimination.
Integer det(const IntMatrix& a);

// gcd of absolute values of entries, 0 for the zero vector.
Integer content(const IntVector& v);
bool is_zero(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& v);
// Divides v by its content in place; returns the content. Zero vector stays zero.
Integer primitivize(IntVector& v);

// Pair (U, U^-1) of integer matrices with det = +-1. Operations that need a
// genuine SL witness assert det = +1 on top of this.
struct UnimodularWitness {
  IntMatrix matrix;
  IntMatrix inverse;
};

bool witness_consistent(const UnimodularWitness& w); // square, product identity, det = +-1

} // namespace torcone
