#pragma once

#include "torcone/matrix.hpp"

namespace torcone {

// U.matrix * v = (g, 0, ..., 0) with g = gcd of |entries|, det(U.matrix) = +1.
// Requires dim(v) >= 2 and v != 0. The transform is a product of 2x2
// extended-gcd blocks, so inputs already of the form (k, 0, ..., 0), k > 0,
// get the identity witness.
struct GcdReduction {
  Integer g;
  UnimodularWitness U;
};
GcdReduction gcd_reduce(const IntVector& v);

// Row-operation Hermite form, lower-triangular echelon convention: columns
// are processed right to left with pivot rows assigned bottom up, pivots
// positive, and in each pivot column the entries below the pivot row reduced
// into [0, pivot). U.matrix * M = H, det(U.matrix) = +-1.
struct HermiteResult {
  IntMatrix H;
  UnimodularWitness U;
};
HermiteResult hermite_normal_form(const IntMatrix& M);

// det-1 matrix whose first column is v. Requires v primitive and nonzero.
UnimodularWitness complete_to_basis(const IntVector& v);

// U.matrix * M * V.matrix = S, diagonal with d1 | d2 | ..., di >= 0.
struct SmithResult {
  IntMatrix S;
  UnimodularWitness U;
  UnimodularWitness V;
};
SmithResult smith_normal_form(const IntMatrix& M);

} // namespace torcone
