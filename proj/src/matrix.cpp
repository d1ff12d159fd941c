#include "torcone/matrix.hpp"

#include "torcone/error.hpp"

namespace torcone {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(int i) const {
  IntVector r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntVector IntMatrix::col(int j) const {
  IntVector c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(Errc::InvalidInput, "matrix product shape mismatch");
  IntMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntVector mul(const IntMatrix& a, const IntVector& v) {
  if (a.cols != static_cast<int>(v.size()))
    throw Error(Errc::InvalidInput, "matrix-vector shape mismatch");
  IntVector r(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * v[j];
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

IntMatrix from_rows(const std::vector<IntVector>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw Error(Errc::InvalidInput, "row length mismatch");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Integer det(const IntMatrix& a) {
  if (a.rows != a.cols) throw Error(Errc::InvalidInput, "determinant of non-square matrix");
  int n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { pivot = i; break; }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Integer(-m.at(n - 1, n - 1));
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool is_zero(const IntVector& v) {
  for (const Integer& x : v)
    if (x != 0) return false;
  return true;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(Errc::InvalidInput, "dot product length mismatch");
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector negate(const IntVector& v) {
  IntVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Integer primitivize(IntVector& v) {
  Integer g = content(v);
  if (g > 1)
    for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return g;
}

bool witness_consistent(const UnimodularWitness& w) {
  if (w.matrix.rows != w.matrix.cols || w.inverse.rows != w.inverse.cols) return false;
  if (w.matrix.rows != w.inverse.rows) return false;
  Integer d = det(w.matrix);
  if (d != 1 && d != -1) return false;
  return mul(w.matrix, w.inverse) == IntMatrix::identity(w.matrix.rows);
}

} // namespace torcone
