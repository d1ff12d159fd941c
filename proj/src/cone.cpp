#include "torcone/cone.hpp"

#include <algorithm>
#include <cstdint>

#include "torcone/error.hpp"

namespace torcone {

namespace {

// Primitive, nonzero, duplicate-free, lexicographically sorted.
std::vector<IntVector> canonical_vectors(int dim, std::vector<IntVector> vs) {
  std::vector<IntVector> out;
  for (IntVector& v : vs) {
    if (static_cast<int>(v.size()) != dim)
      throw Error(Errc::InvalidInput, "vector dimension mismatch");
    if (is_zero(v)) continue;
    primitivize(v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int rank_int(const std::vector<IntVector>& rows, int cols) {
  std::vector<IntVector> m = rows;
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] == 0) continue;
      Integer a = m[rank][c], b = m[r][c];
      for (int j = 0; j < cols; ++j) m[r][j] = a * m[r][j] - b * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

void check_dim_cap(int dim, int dim_cap) {
  if (dim > dim_cap)
    throw Error(Errc::DimensionCapExceeded,
                "cone dimension " + std::to_string(dim) + " exceeds cap " +
                    std::to_string(dim_cap));
  if (dim < 1) throw Error(Errc::InvalidInput, "cone dimension must be positive");
}

struct DDRay {
  IntVector v;
  uint64_t tight = 0;
};

IntVector scaled_diff(const Integer& a, const IntVector& x, const Integer& b,
                      const IntVector& y) {
  IntVector r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] - b * y[i];
  return r;
}

// Generator list of the dual cone: extreme rays plus both signs of the
// lineality basis.
std::vector<IntVector> pack(const DDResult& dd) {
  std::vector<IntVector> out = dd.rays;
  for (const IntVector& b : dd.lineality) {
    out.push_back(b);
    out.push_back(negate(b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool all_nonnegative(const std::vector<IntVector>& normals,
                     const std::vector<IntVector>& gens) {
  for (const IntVector& n : normals)
    for (const IntVector& g : gens)
      if (dot(n, g) < 0) return false;
  return true;
}

} // namespace

DDResult dual_from_constraints(int dim, const std::vector<IntVector>& constraints) {
  if (constraints.size() > 64)
    throw Error(Errc::InvalidInput, "constraint count exceeds 64");
  std::vector<IntVector> lin;
  for (int i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<DDRay> rays;

  for (size_t idx = 0; idx < constraints.size(); ++idx) {
    const IntVector& a = constraints[idx];
    if (static_cast<int>(a.size()) != dim)
      throw Error(Errc::InvalidInput, "constraint dimension mismatch");
    if (is_zero(a)) continue;
    uint64_t bit = 1ULL << idx;

    int b0_pos = -1;
    for (size_t b = 0; b < lin.size(); ++b)
      if (dot(a, lin[b]) != 0) { b0_pos = static_cast<int>(b); break; }

    if (b0_pos >= 0) {
      IntVector b0 = lin[b0_pos];
      lin.erase(lin.begin() + b0_pos);
      Integer s0 = dot(a, b0);
      if (s0 < 0) {
        b0 = negate(b0);
        s0 = -s0;
      }
      for (IntVector& b : lin) {
        b = scaled_diff(s0, b, dot(a, b), b0);
        primitivize(b);
      }
      for (DDRay& r : rays) {
        r.v = scaled_diff(s0, r.v, dot(a, r.v), b0);
        primitivize(r.v);
        r.tight |= bit;
      }
      // b0 was in the lineality the whole time, hence tight on everything
      // processed so far.
      DDRay nr;
      nr.v = std::move(b0);
      nr.tight = bit - 1;
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<DDRay> pos, zero, neg;
    std::vector<Integer> pos_val, neg_val;
    for (DDRay& r : rays) {
      Integer s = dot(a, r.v);
      if (s > 0) {
        pos.push_back(std::move(r));
        pos_val.push_back(std::move(s));
      } else if (s < 0) {
        neg.push_back(std::move(r));
        neg_val.push_back(std::move(s));
      } else {
        r.tight |= bit;
        zero.push_back(std::move(r));
      }
    }
    int lin_dim = static_cast<int>(lin.size());
    int adjacency_rank = dim - lin_dim - 2;
    std::vector<DDRay> next = std::move(pos);
    for (DDRay& z : zero) next.push_back(std::move(z));
    size_t pos_count = pos_val.size();
    for (size_t p = 0; p < pos_count; ++p)
      for (size_t n = 0; n < neg.size(); ++n) {
        if (adjacency_rank < 0) continue;
        uint64_t common = next[p].tight & ~bit & neg[n].tight;
        std::vector<IntVector> tight_constraints;
        for (size_t i = 0; i < idx; ++i)
          if (common & (1ULL << i)) tight_constraints.push_back(constraints[i]);
        if (rank_int(tight_constraints, dim) != adjacency_rank) continue;
        IntVector w = scaled_diff(pos_val[p], neg[n].v, neg_val[n], next[p].v);
        if (is_zero(w)) continue;
        primitivize(w);
        bool dup = false;
        for (const DDRay& r : next)
          if (r.v == w) { dup = true; break; }
        if (dup) continue;
        DDRay nr;
        nr.v = std::move(w);
        nr.tight = common | bit;
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }

  DDResult out;
  out.lineality = std::move(lin);
  for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.lineality.begin(), out.lineality.end());
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

Cone cone_from_generators(int dim, std::vector<IntVector> gens) {
  Cone c;
  c.dim = dim;
  c.generators = canonical_vectors(dim, std::move(gens));
  if (c.generators->empty())
    throw Error(Errc::DegenerateInput, "no nonzero generators after primitivization");
  return c;
}

Cone cone_from_facet_normals(int dim, std::vector<IntVector> normals) {
  Cone c;
  c.dim = dim;
  c.facet_normals = canonical_vectors(dim, std::move(normals));
  return c;
}

Cone cone_from_both(int dim, std::vector<IntVector> gens, std::vector<IntVector> normals) {
  Cone c;
  c.dim = dim;
  c.generators = canonical_vectors(dim, std::move(gens));
  if (c.generators->empty())
    throw Error(Errc::DegenerateInput, "no nonzero generators after primitivization");
  c.facet_normals = canonical_vectors(dim, std::move(normals));
  return c;
}

Cone dual_description(const Cone& c, int dim_cap) {
  check_dim_cap(c.dim, dim_cap);
  if (!c.generators && !c.facet_normals)
    throw Error(Errc::InvalidInput, "cone carries no description");

  Cone out;
  out.dim = c.dim;
  if (c.generators) {
    if (c.generators->empty())
      throw Error(Errc::DegenerateInput, "empty generator description");
    std::vector<IntVector> normals = pack(dual_from_constraints(c.dim, *c.generators));
    std::vector<IntVector> gens = pack(dual_from_constraints(c.dim, normals));
    if (c.facet_normals) {
      // Set equality of the two described cones: the supplied generators
      // satisfy the supplied inequalities, and the minimal generators of the
      // supplied inequalities satisfy the computed ones. Together that is
      // containment both ways.
      std::vector<IntVector> gens2 = pack(dual_from_constraints(c.dim, *c.facet_normals));
      if (!all_nonnegative(*c.facet_normals, *c.generators) ||
          !all_nonnegative(normals, gens2))
        throw Error(Errc::InvalidInput, "generator and facet descriptions disagree");
    }
    out.generators = std::move(gens);
    out.facet_normals = std::move(normals);
  } else {
    std::vector<IntVector> gens = pack(dual_from_constraints(c.dim, *c.facet_normals));
    if (gens.empty()) {
      // the zero cone; keep an explicit empty generator list
      out.generators = std::move(gens);
      out.facet_normals = c.facet_normals;
      return out;
    }
    std::vector<IntVector> normals = pack(dual_from_constraints(c.dim, gens));
    out.generators = std::move(gens);
    out.facet_normals = std::move(normals);
  }
  return out;
}

LinealityReport lineality(const Cone& c, int dim_cap) {
  Cone cc = dual_description(c, dim_cap);
  // Lineality space = kernel of the facet-normal matrix; the kernel columns
  // of the Smith V witness are a saturated lattice basis.
  IntMatrix N = from_rows(*cc.facet_normals, c.dim);
  SmithResult s = smith_normal_form(N);
  int n = std::min(s.S.rows, s.S.cols);
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (s.S.at(i, i) != 0) ++rank;
  LinealityReport rep;
  rep.dimension = c.dim - rank;
  for (int j = rank; j < c.dim; ++j) rep.lattice_basis.push_back(s.V.matrix.col(j));
  return rep;
}

bool is_strictly_convex(const Cone& c, int dim_cap) {
  return lineality(c, dim_cap).dimension == 0;
}

bool is_whole_space(const Cone& c, int dim_cap) {
  return lineality(c, dim_cap).dimension == c.dim;
}

StandardFormWitness normalize_to_standard(const Cone& c, int dim_cap) {
  Cone cc = dual_description(c, dim_cap);
  LinealityReport lr = lineality(cc, dim_cap);
  int d = c.dim;
  int k = lr.dimension;
  if (k == 0) throw Error(Errc::NotApplicable, "cone is strictly convex");
  if (k == d) throw Error(Errc::NotApplicable, "cone is the whole space");

  const std::vector<IntVector>& normals = *cc.facet_normals;
  if (static_cast<int>(normals.size()) != d - k)
    throw Error(Errc::NotUnimodular, "cone has " + std::to_string(normals.size()) +
                                         " facets, expected " + std::to_string(d - k));
  IntMatrix N = from_rows(normals, d);
  SmithResult s = smith_normal_form(N);
  for (int i = 0; i < d - k; ++i)
    if (s.S.at(i, i) != 1)
      throw Error(Errc::NotUnimodular,
                  "facet normals are not a lattice basis of the quotient dual "
                  "(invariant factor " + s.S.at(i, i).get_str() + ")");

  // U has the facet normals as its first d-k rows: U = diag(U1^-1, I_k) * V1^-1,
  // using S = U1 * N * V1 = [I 0].
  IntMatrix T = IntMatrix::identity(d);
  IntMatrix Tinv = IntMatrix::identity(d);
  for (int i = 0; i < d - k; ++i)
    for (int j = 0; j < d - k; ++j) {
      T.at(i, j) = s.U.inverse.at(i, j);
      Tinv.at(i, j) = s.U.matrix.at(i, j);
    }
  IntMatrix Y = mul(T, s.V.inverse);
  IntMatrix Yinv = mul(s.V.matrix, Tinv);
  if (det(Y) == -1) {
    for (int j = 0; j < d; ++j) Y.at(d - 1, j) = -Y.at(d - 1, j);
    for (int i = 0; i < d; ++i) Yinv.at(i, d - 1) = -Yinv.at(i, d - 1);
  }

  for (int i = 0; i < d - k; ++i)
    if (Y.row(i) != normals[i])
      throw Error(Errc::NotUnimodular, "standard form construction failed");
  for (const IntVector& g : *cc.generators) {
    IntVector img = mul(Y, g);
    for (int i = 0; i < d - k; ++i)
      if (img[i] < 0) throw Error(Errc::NotUnimodular, "standard form verification failed");
  }
  StandardFormWitness w;
  w.k = k;
  w.U = {std::move(Y), std::move(Yinv)};
  return w;
}

IntVector reeb_vector(const Cone& c, int dim_cap) {
  Cone cc = dual_description(c, dim_cap);
  if (lineality(cc, dim_cap).dimension != 0)
    throw Error(Errc::NotStrictlyConvex, "cone contains a line");
  const std::vector<IntVector>& normals = *cc.facet_normals;
  if (normals.empty()) throw Error(Errc::EmptyFacetSet, "cone has no facets");
  IntVector R(c.dim);
  for (const IntVector& n : normals)
    for (int i = 0; i < c.dim; ++i) R[i] += n[i];
  return R;
}

SlicePolytope slice(const Cone& c, const IntVector& R, int dim_cap) {
  if (static_cast<int>(R.size()) != c.dim)
    throw Error(Errc::InvalidInput, "slice vector dimension mismatch");
  if (is_zero(R)) throw Error(Errc::ZeroReeb, "slice vector is zero");
  Cone cc = dual_description(c, dim_cap);
  SlicePolytope out;
  out.reeb = R;
  out.bounded = true;
  for (const IntVector& g : *cc.generators) {
    Integer h = dot(R, g);
    if (h <= 0) {
      out.bounded = false;
      continue;
    }
    QVector v(c.dim);
    for (int i = 0; i < c.dim; ++i) v[i] = make_rational(g[i], h);
    out.vertices.push_back(std::move(v));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  return out;
}

} // namespace torcone
