#pragma once

// Shared helpers for the test drivers: deterministic random data and
// independent oracles (Euclid gcd, Fourier-Motzkin feasibility, rational
// rank) kept free of the library's own elimination code paths.

#include <vector>

#include "torcone/matrix.hpp"
#include "torcone/rational.hpp"
#include "torcone/rng.hpp"

namespace torcone::testsupport {

inline IntVector random_vector(SplitMix64& rng, int dim, long lo, long hi) {
  IntVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Integer(rng.next_in(lo, hi));
  return v;
}

inline IntVector random_nonzero_vector(SplitMix64& rng, int dim, long lo, long hi) {
  for (;;) {
    IntVector v = random_vector(rng, dim, lo, hi);
    if (!is_zero(v)) return v;
  }
}

inline IntVector random_primitive_vector(SplitMix64& rng, int dim, long lo, long hi) {
  for (;;) {
    IntVector v = random_nonzero_vector(rng, dim, lo, hi);
    primitivize(v);
    return v;
  }
}

inline IntMatrix random_matrix(SplitMix64& rng, int rows, int cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Integer(rng.next_in(lo, hi));
  return m;
}

// Product of random transvections I + c*E_ij, all of determinant +1.
inline IntMatrix random_sl_matrix(SplitMix64& rng, int dim, int ops = 8) {
  IntMatrix m = IntMatrix::identity(dim);
  for (int n = 0; n < ops; ++n) {
    int i = static_cast<int>(rng.next_in(0, dim - 1));
    int j = static_cast<int>(rng.next_in(0, dim - 1));
    if (i == j) continue;
    Integer c(rng.next_in(-2, 2));
    for (int col = 0; col < dim; ++col) m.at(i, col) += c * m.at(j, col);
  }
  return m;
}

// Euclid's algorithm, the independent gcd oracle.
inline Integer euclid_gcd(const IntVector& v) {
  Integer g = 0;
  for (Integer x : v) {
    if (x < 0) x = -x;
    while (x != 0) {
      Integer r = g % x;
      if (r < 0) r += (x < 0 ? -x : x);
      g = x;
      x = r;
    }
    if (g == 1) return g;
  }
  return g;
}

// --- exact linear-programming feasibility via Fourier-Motzkin ---

struct LinearSystem {
  // rows a with meaning a . x <= rhs
  std::vector<QVector> lhs;
  QVector rhs;
  int nvars = 0;
};

// Eliminates variables one by one; feasibility of a system of weak
// inequalities over the rationals. Rows are rescaled to primitive integer
// form and deduplicated after every elimination, and the variable with the
// fewest pos*neg pairings goes first, which keeps the row count tame at the
// problem sizes used here.
inline bool fourier_motzkin_feasible(LinearSystem sys) {
  auto canonicalize = [](std::vector<QVector>& lhs, QVector& rhs) {
    std::vector<QVector> rows;
    for (size_t r = 0; r < lhs.size(); ++r) {
      QVector row = lhs[r];
      row.push_back(rhs[r]);
      Integer l = 1;
      for (const Rational& x : row) {
        Integer den = x.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
      }
      Integer gc = 0;
      for (Rational& x : row) {
        x *= Rational(l);
        mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), x.get_num().get_mpz_t());
      }
      if (gc > 1)
        for (Rational& x : row) x /= Rational(gc);
      bool trivial = true;
      for (size_t j = 0; j + 1 < row.size(); ++j)
        if (row[j] != 0) { trivial = false; break; }
      if (trivial && row.back() >= 0) continue; // 0 <= rhs, drop
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    lhs.clear();
    rhs.clear();
    for (QVector& row : rows) {
      rhs.push_back(row.back());
      row.pop_back();
      lhs.push_back(std::move(row));
    }
  };

  std::vector<bool> eliminated(sys.nvars, false);
  canonicalize(sys.lhs, sys.rhs);
  for (int round = 0; round < sys.nvars; ++round) {
    // pick the cheapest remaining variable
    int best = -1;
    size_t best_cost = 0;
    for (int var = 0; var < sys.nvars; ++var) {
      if (eliminated[var]) continue;
      size_t np = 0, nn = 0;
      for (const QVector& row : sys.lhs) {
        if (row[var] > 0) ++np;
        else if (row[var] < 0) ++nn;
      }
      size_t cost = np * nn + np + nn;
      if (best < 0 || cost < best_cost) {
        best = var;
        best_cost = cost;
      }
    }
    int var = best;
    eliminated[var] = true;
    std::vector<QVector> pos, neg, zero;
    QVector pos_rhs, neg_rhs, zero_rhs;
    for (size_t r = 0; r < sys.lhs.size(); ++r) {
      const Rational& c = sys.lhs[r][var];
      if (c > 0) {
        pos.push_back(sys.lhs[r]);
        pos_rhs.push_back(sys.rhs[r]);
      } else if (c < 0) {
        neg.push_back(sys.lhs[r]);
        neg_rhs.push_back(sys.rhs[r]);
      } else {
        zero.push_back(sys.lhs[r]);
        zero_rhs.push_back(sys.rhs[r]);
      }
    }
    std::vector<QVector> next = zero;
    QVector next_rhs = zero_rhs;
    for (size_t p = 0; p < pos.size(); ++p)
      for (size_t n = 0; n < neg.size(); ++n) {
        // scale to cancel: row_p / cp - row_n / cn  (cp > 0 > cn)
        Rational cp = pos[p][var], cn = neg[n][var];
        QVector row(sys.lhs.empty() ? pos[p].size() : sys.lhs[0].size());
        for (size_t j = 0; j < row.size(); ++j) row[j] = pos[p][j] / cp - neg[n][j] / cn;
        next.push_back(std::move(row));
        next_rhs.push_back(pos_rhs[p] / cp - neg_rhs[n] / cn);
      }
    sys.lhs = std::move(next);
    sys.rhs = std::move(next_rhs);
    canonicalize(sys.lhs, sys.rhs);
    for (size_t r = 0; r < sys.lhs.size(); ++r) {
      bool constant = true;
      for (int j = 0; j < sys.nvars; ++j)
        if (sys.lhs[r][j] != 0) { constant = false; break; }
      if (constant && sys.rhs[r] < 0) return false;
    }
  }
  for (size_t r = 0; r < sys.lhs.size(); ++r)
    if (sys.rhs[r] < 0) return false;
  return true;
}

// Is target in the cone generated by gens? By Farkas, target is outside the
// cone exactly when some y satisfies <g_i, y> >= 0 for all i and
// <target, y> < 0; homogeneity lets the strict inequality be normalized to
// <target, y> <= -1, so the separating-functional system is a weak-inequality
// feasibility problem in dim variables.
inline bool cone_member_oracle(const std::vector<IntVector>& gens, const IntVector& target) {
  int d = static_cast<int>(target.size());
  LinearSystem sys;
  sys.nvars = d;
  for (const IntVector& g : gens) {
    QVector row(d);
    for (int i = 0; i < d; ++i) row[i] = Rational(-g[i]); // -<g,y> <= 0
    sys.lhs.push_back(std::move(row));
    sys.rhs.push_back(Rational(0));
  }
  QVector trow(d);
  for (int i = 0; i < d; ++i) trow[i] = Rational(target[i]); // <target,y> <= -1
  sys.lhs.push_back(std::move(trow));
  sys.rhs.push_back(Rational(-1));
  return !fourier_motzkin_feasible(std::move(sys));
}

// Rank over the rationals by Gaussian elimination on a copy.
inline int rational_rank(const std::vector<IntVector>& rows, int cols) {
  std::vector<QVector> m;
  for (const IntVector& r : rows) {
    QVector q(cols);
    for (int j = 0; j < cols; ++j) q[j] = Rational(r[j]);
    m.push_back(std::move(q));
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace torcone::testsupport
