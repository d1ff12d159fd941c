#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torcone/error.hpp"
#include "torcone/lattice.hpp"

using namespace torcone;
using namespace torcone::testsupport;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> rs;
  size_t cols = 0;
  for (auto& r : rows) {
    rs.push_back(iv(r));
    cols = r.size();
  }
  return from_rows(rs, static_cast<int>(cols));
}

void check_gcd_reduction(const IntVector& v) {
  GcdReduction r = gcd_reduce(v);
  CHECK(r.g == euclid_gcd(v));
  CHECK(det(r.U.matrix) == 1);
  CHECK(witness_consistent(r.U));
  IntVector image = mul(r.U.matrix, v);
  CHECK(image[0] == r.g);
  for (size_t i = 1; i < image.size(); ++i) CHECK(image[i] == 0);
}

} // namespace

TEST_CASE("gcd_reduce on the worked triples") {
  check_gcd_reduction(iv({6, 10, 15}));
  CHECK(gcd_reduce(iv({6, 10, 15})).g == 1);

  check_gcd_reduction(iv({2, 4, 6}));
  CHECK(gcd_reduce(iv({2, 4, 6})).g == 2);

  GcdReduction already = gcd_reduce(iv({7, 0, 0}));
  CHECK(already.g == 7);
  CHECK(already.U.matrix == IntMatrix::identity(3));
}

TEST_CASE("gcd_reduce edge cases") {
  CHECK_THROWS_AS(gcd_reduce(iv({0, 0, 0})), Error);
  check_gcd_reduction(iv({-6, 0, 0}));
  check_gcd_reduction(iv({0, 0, 5}));
  check_gcd_reduction(iv({-4, 6}));
}

TEST_CASE("gcd_reduce over random vectors") {
  SplitMix64 rng(101);
  for (int it = 0; it < 300; ++it) {
    int dim = static_cast<int>(rng.next_in(2, 5));
    check_gcd_reduction(random_nonzero_vector(rng, dim, -50, 50));
  }
}

TEST_CASE("gcd_reduce is deterministic") {
  IntVector v = iv({6, 10, 15});
  GcdReduction a = gcd_reduce(v);
  GcdReduction b = gcd_reduce(v);
  CHECK(a.U.matrix == b.U.matrix);
  CHECK(a.U.inverse == b.U.inverse);
}

TEST_CASE("hermite_normal_form specials") {
  HermiteResult id = hermite_normal_form(IntMatrix::identity(3));
  CHECK(id.H == IntMatrix::identity(3));
  CHECK(id.U.matrix == IntMatrix::identity(3));

  IntMatrix z(2, 2);
  HermiteResult zr = hermite_normal_form(z);
  CHECK(zr.H == z);
  CHECK(zr.U.matrix == IntMatrix::identity(2));

  IntMatrix m = im({{2, 4}, {1, 3}});
  HermiteResult r = hermite_normal_form(m);
  CHECK(mul(r.U.matrix, m) == r.H);
  Integer ud = det(r.U.matrix);
  CHECK((ud == 1 || ud == -1));
  // lower-triangular echelon
  for (int i = 0; i < r.H.rows; ++i)
    for (int j = i + 1; j < r.H.cols; ++j) CHECK(r.H.at(i, j) == 0);
}

TEST_CASE("hermite_normal_form reconstructs random matrices") {
  SplitMix64 rng(202);
  for (int it = 0; it < 200; ++it) {
    int rows = static_cast<int>(rng.next_in(1, 4));
    int cols = static_cast<int>(rng.next_in(1, 4));
    IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    HermiteResult r = hermite_normal_form(m);
    CHECK(witness_consistent(r.U));
    CHECK(mul(r.U.matrix, m) == r.H);
    CHECK(mul(r.U.inverse, r.H) == m);

    // the double reversal of H is row-style upper echelon: pivots positive,
    // entries above each pivot reduced into [0, pivot)
    IntMatrix up(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) up.at(i, j) = r.H.at(rows - 1 - i, cols - 1 - j);
    int prev_col = -1;
    for (int i = 0; i < rows; ++i) {
      int lead = -1;
      for (int j = 0; j < cols; ++j)
        if (up.at(i, j) != 0) { lead = j; break; }
      if (lead < 0) continue; // zero rows may only be followed by zero rows
      CHECK(lead > prev_col);
      prev_col = lead;
      CHECK(up.at(i, lead) > 0);
      for (int r2 = 0; r2 < i; ++r2) {
        CHECK(up.at(r2, lead) >= 0);
        CHECK(up.at(r2, lead) < up.at(i, lead));
      }
    }
  }
}

TEST_CASE("complete_to_basis examples") {
  UnimodularWitness e1 = complete_to_basis(iv({1, 0, 0}));
  CHECK(e1.matrix == IntMatrix::identity(3));

  UnimodularWitness w2 = complete_to_basis(iv({2, 3}));
  CHECK(det(w2.matrix) == 1);
  CHECK(w2.matrix.at(0, 0) == 2);
  CHECK(w2.matrix.at(1, 0) == 3);

  UnimodularWitness w3 = complete_to_basis(iv({6, 10, 15}));
  CHECK(det(w3.matrix) == 1);
  IntVector first = w3.matrix.col(0);
  CHECK(first == iv({6, 10, 15}));
}

TEST_CASE("complete_to_basis rejects bad input") {
  CHECK_THROWS_AS(complete_to_basis(iv({0, 0})), Error);
  CHECK_THROWS_AS(complete_to_basis(iv({2, 4, 6})), Error);
  try {
    complete_to_basis(iv({2, 4}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::NotPrimitive);
  }
}

TEST_CASE("complete_to_basis over random primitive vectors") {
  SplitMix64 rng(303);
  for (int it = 0; it < 300; ++it) {
    int dim = static_cast<int>(rng.next_in(2, 5));
    IntVector v = random_primitive_vector(rng, dim, -50, 50);
    UnimodularWitness w = complete_to_basis(v);
    CHECK(det(w.matrix) == 1);
    CHECK(witness_consistent(w));
    CHECK(w.matrix.col(0) == v);
  }
}

TEST_CASE("smith_normal_form frozen cases") {
  SmithResult r = smith_normal_form(im({{2, 0}, {0, 3}}));
  CHECK(r.S == im({{1, 0}, {0, 6}}));
  CHECK(mul(mul(r.U.matrix, im({{2, 0}, {0, 3}})), r.V.matrix) == r.S);

  IntMatrix z(3, 2);
  SmithResult zr = smith_normal_form(z);
  CHECK(zr.S == z);
  CHECK(zr.U.matrix == IntMatrix::identity(3));
  CHECK(zr.V.matrix == IntMatrix::identity(2));

  SmithResult id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.S == IntMatrix::identity(2));
}

TEST_CASE("smith_normal_form over random matrices") {
  SplitMix64 rng(404);
  for (int it = 0; it < 200; ++it) {
    int rows = static_cast<int>(rng.next_in(1, 4));
    int cols = static_cast<int>(rng.next_in(1, 4));
    IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    SmithResult r = smith_normal_form(m);
    CHECK(witness_consistent(r.U));
    CHECK(witness_consistent(r.V));
    CHECK(mul(mul(r.U.matrix, m), r.V.matrix) == r.S);
    // diagonal, nonnegative, divisibility chain
    for (int i = 0; i < r.S.rows; ++i)
      for (int j = 0; j < r.S.cols; ++j)
        if (i != j) CHECK(r.S.at(i, j) == 0);
    int n = std::min(r.S.rows, r.S.cols);
    for (int i = 0; i < n; ++i) CHECK(r.S.at(i, i) >= 0);
    for (int i = 0; i + 1 < n; ++i) {
      const Integer& a = r.S.at(i, i);
      const Integer& b = r.S.at(i + 1, i + 1);
      if (a == 0) {
        CHECK(b == 0);
      } else {
        CHECK(mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()));
      }
    }
  }
}
