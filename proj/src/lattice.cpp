#include "torcone/lattice.hpp"

#include "torcone/error.hpp"

namespace torcone {

namespace {

// Elementary row operations applied in lockstep to a target matrix A and the
// witness pair, maintaining A = U * A_original and U * Uinv = I.
struct RowOps {
  IntMatrix& A;
  IntMatrix& U;
  IntMatrix& Uinv;

  void swap_rows(int i, int j) {
    for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }

  void negate_row(int i) {
    for (int c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
  }

  // row dst += c * row src
  void add_multiple(int dst, int src, const Integer& c) {
    for (int j = 0; j < A.cols; ++j) A.at(dst, j) += c * A.at(src, j);
    for (int j = 0; j < U.cols; ++j) U.at(dst, j) += c * U.at(src, j);
    for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, src) -= c * Uinv.at(r, dst);
  }

  // (row_i, row_j) <- (p*row_i + q*row_j, u*row_i + w*row_j); requires pw - qu = 1
  void combine(int i, int j, const Integer& p, const Integer& q, const Integer& u,
               const Integer& w) {
    auto apply_rows = [&](IntMatrix& m) {
      for (int c = 0; c < m.cols; ++c) {
        Integer a = m.at(i, c), b = m.at(j, c);
        m.at(i, c) = p * a + q * b;
        m.at(j, c) = u * a + w * b;
      }
    };
    apply_rows(A);
    apply_rows(U);
    for (int r = 0; r < Uinv.rows; ++r) {
      Integer a = Uinv.at(r, i), b = Uinv.at(r, j);
      Uinv.at(r, i) = w * a - u * b;
      Uinv.at(r, j) = -q * a + p * b;
    }
  }
};

// Column analogue, maintaining A = A_original * V and V * Vinv = I.
struct ColOps {
  IntMatrix& A;
  IntMatrix& V;
  IntMatrix& Vinv;

  void swap_cols(int i, int j) {
    for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }

  // col dst += c * col src
  void add_multiple(int dst, int src, const Integer& c) {
    for (int r = 0; r < A.rows; ++r) A.at(r, dst) += c * A.at(r, src);
    for (int r = 0; r < V.rows; ++r) V.at(r, dst) += c * V.at(r, src);
    for (int j = 0; j < Vinv.cols; ++j) Vinv.at(src, j) -= c * Vinv.at(dst, j);
  }

  // (col_i, col_j) <- (p*col_i + q*col_j, u*col_i + w*col_j); requires pw - qu = 1
  void combine(int i, int j, const Integer& p, const Integer& q, const Integer& u,
               const Integer& w) {
    auto apply_cols = [&](IntMatrix& m) {
      for (int r = 0; r < m.rows; ++r) {
        Integer a = m.at(r, i), b = m.at(r, j);
        m.at(r, i) = p * a + q * b;
        m.at(r, j) = u * a + w * b;
      }
    };
    apply_cols(A);
    apply_cols(V);
    for (int c = 0; c < Vinv.cols; ++c) {
      Integer a = Vinv.at(i, c), b = Vinv.at(j, c);
      Vinv.at(i, c) = w * a - u * b;
      Vinv.at(j, c) = -q * a + p * b;
    }
  }
};

struct Xgcd {
  Integer g, s, t; // g = s*a + t*b, g >= 0
};

Xgcd xgcd(const Integer& a, const Integer& b) {
  Xgcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// gcd step on rows (i, j): sends (a, b) to (g, 0) with a det +1 block.
// When a already divides b this must degrade to a plain subtraction that
// leaves row i untouched; gcdext's cofactor convention does not guarantee
// that (gcdext(1,1) = 0*1 + 1*1), and the resulting row swap makes the
// alternating row/column sweeps in smith_normal_form cycle.
void gcd_rows(RowOps& ops, int i, int j, Integer a, Integer b) {
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    ops.add_multiple(j, i, -q);
    return;
  }
  Xgcd x = xgcd(a, b);
  Integer r, w;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), x.g.get_mpz_t());
  mpz_divexact(w.get_mpz_t(), b.get_mpz_t(), x.g.get_mpz_t());
  ops.combine(i, j, x.s, x.t, -w, r);
}

void gcd_cols(ColOps& ops, int i, int j, Integer a, Integer b) {
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    ops.add_multiple(j, i, -q);
    return;
  }
  Xgcd x = xgcd(a, b);
  Integer r, w;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), x.g.get_mpz_t());
  mpz_divexact(w.get_mpz_t(), b.get_mpz_t(), x.g.get_mpz_t());
  ops.combine(i, j, x.s, x.t, -w, r);
}

IntMatrix reverse_both(const IntMatrix& m) {
  IntMatrix r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(m.rows - 1 - i, m.cols - 1 - j);
  return r;
}

// Standard row-style HNF: upper echelon, pivots positive, entries above a
// pivot reduced into [0, pivot). Pivot row: smallest index with a nonzero
// entry in the current column.
HermiteResult hnf_upper(const IntMatrix& M) {
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(M.rows);
  IntMatrix Uinv = IntMatrix::identity(M.rows);
  RowOps ops{A, U, Uinv};
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int piv = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) ops.swap_rows(piv, r);
    for (int i = r + 1; i < A.rows; ++i) {
      if (A.at(i, c) == 0) continue;
      gcd_rows(ops, r, i, A.at(r, c), A.at(i, c));
    }
    if (A.at(r, c) < 0) ops.negate_row(r);
    for (int i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(i, c).get_mpz_t(), A.at(r, c).get_mpz_t());
      if (q != 0) ops.add_multiple(i, r, -q);
    }
    ++r;
  }
  return {A, {U, Uinv}};
}

} // namespace

GcdReduction gcd_reduce(const IntVector& v) {
  int n = static_cast<int>(v.size());
  if (n < 2) throw Error(Errc::InvalidInput, "gcd_reduce needs dimension >= 2");
  if (is_zero(v)) throw Error(Errc::ZeroVector, "gcd_reduce of the zero vector");
  IntMatrix A(n, 1);
  for (int i = 0; i < n; ++i) A.at(i, 0) = v[i];
  IntMatrix U = IntMatrix::identity(n);
  IntMatrix Uinv = IntMatrix::identity(n);
  RowOps ops{A, U, Uinv};
  for (int i = 1; i < n; ++i) {
    if (A.at(i, 0) == 0) continue;
    gcd_rows(ops, 0, i, A.at(0, 0), A.at(i, 0));
  }
  if (A.at(0, 0) < 0) ops.combine(0, 1, -1, 0, 0, -1); // diag(-1,-1), det +1
  return {A.at(0, 0), {U, Uinv}};
}

HermiteResult hermite_normal_form(const IntMatrix& M) {
  // Lower-triangular convention via the double reversal M' = Pr*M*Pc:
  // H = Pr*H'*Pc and U = Pr*U'*Pr, since Pc*Pc = I.
  HermiteResult up = hnf_upper(reverse_both(M));
  HermiteResult res;
  res.H = reverse_both(up.H);
  res.U.matrix = reverse_both(up.U.matrix);
  res.U.inverse = reverse_both(up.U.inverse);
  return res;
}

UnimodularWitness complete_to_basis(const IntVector& v) {
  if (is_zero(v)) throw Error(Errc::ZeroVector, "complete_to_basis of the zero vector");
  if (v.size() < 2) throw Error(Errc::InvalidInput, "complete_to_basis needs dimension >= 2");
  if (content(v) != 1) throw Error(Errc::NotPrimitive, "vector content is not 1");
  GcdReduction r = gcd_reduce(v);
  // U*v = e1, so U^-1 has v as its first column and determinant 1.
  return {r.U.inverse, r.U.matrix};
}

SmithResult smith_normal_form(const IntMatrix& M) {
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(M.rows);
  IntMatrix Uinv = IntMatrix::identity(M.rows);
  IntMatrix V = IntMatrix::identity(M.cols);
  IntMatrix Vinv = IntMatrix::identity(M.cols);
  RowOps rops{A, U, Uinv};
  ColOps cops{A, V, Vinv};
  int n = std::min(M.rows, M.cols);

  auto diagonalize_from = [&](int start) {
    for (int t = start; t < n; ++t) {
      int pi = -1, pj = -1;
      for (int i = t; i < A.rows && pi < 0; ++i)
        for (int j = t; j < A.cols; ++j)
          if (A.at(i, j) != 0) { pi = i; pj = j; break; }
      if (pi < 0) break;
      if (pi != t) rops.swap_rows(pi, t);
      if (pj != t) cops.swap_cols(pj, t);
      for (;;) {
        bool changed = false;
        for (int i = t + 1; i < A.rows; ++i)
          if (A.at(i, t) != 0) {
            gcd_rows(rops, t, i, A.at(t, t), A.at(i, t));
            changed = true;
          }
        for (int j = t + 1; j < A.cols; ++j)
          if (A.at(t, j) != 0) {
            gcd_cols(cops, t, j, A.at(t, t), A.at(t, j));
            changed = true;
          }
        if (!changed) break;
      }
      if (A.at(t, t) < 0) rops.negate_row(t);
    }
  };

  diagonalize_from(0);
  // Enforce d1 | d2 | ...: folding the next column in replaces (di, di+1)
  // with (gcd, lcm) after re-diagonalization.
  for (;;) {
    int bad = -1;
    for (int t = 0; t + 1 < n; ++t) {
      const Integer& a = A.at(t, t);
      const Integer& b = A.at(t + 1, t + 1);
      if (b == 0) continue;
      if (a == 0 || !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) { bad = t; break; }
    }
    if (bad < 0) break;
    cops.add_multiple(bad, bad + 1, 1);
    diagonalize_from(bad);
  }
  return {A, {U, Uinv}, {V, Vinv}};
}

} // namespace torcone
