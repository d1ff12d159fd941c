#include "torcone/charts.hpp"

#include <set>

#include "torcone/error.hpp"
#include "torcone/rng.hpp"

namespace torcone {

ManifoldChart ManifoldChart::tk_sphere(int d, int k) {
  if (k < 1 || k > d) throw Error(Errc::InvalidInput, "need 1 <= k <= d");
  ManifoldChart c;
  c.kind = ChartKind::TkSphere;
  c.d = d;
  c.k = k;
  for (int i = 1; i <= k; ++i) c.coords.push_back("th" + std::to_string(i));
  for (int i = 1; i <= k; ++i) c.coords.push_back("x" + std::to_string(i));
  for (int j = 1; j <= d - k; ++j) {
    c.coords.push_back("a" + std::to_string(j));
    c.coords.push_back("b" + std::to_string(j));
  }
  c.torus_count = k;
  c.sphere_count = k + 2 * (d - k);
  return c;
}

ManifoldChart ManifoldChart::t2s3() {
  ManifoldChart c;
  c.kind = ChartKind::T2S3;
  c.d = 3;
  c.k = 2;
  c.coords = {"th1", "th2", "a1", "b1", "a2", "b2"};
  c.torus_count = 2;
  c.sphere_count = 4;
  return c;
}

int ManifoldChart::torus_rank() const {
  return kind == ChartKind::TkSphere ? d : 3;
}

namespace {

Rational small_rational(SplitMix64& rng, long num_range, long den_range) {
  Integer num(rng.next_in(-num_range, num_range));
  Integer den(rng.next_in(1, den_range));
  return make_rational(num, den);
}

} // namespace

std::vector<SamplePoint> sample_points(const ManifoldChart& chart, int n, uint64_t seed) {
  if (n < 1) throw Error(Errc::InvalidInput, "sample count must be positive");
  SplitMix64 rng(seed);
  int m = chart.sphere_count;
  if (m < 2) throw Error(Errc::InvalidInput, "sphere factor is zero-dimensional");
  int amb = chart.ambient_dim();
  std::vector<SamplePoint> out;
  std::set<QVector> seen;
  long attempts = 0;
  while (static_cast<int>(out.size()) < n) {
    if (++attempts > 1000L * n + 1000)
      throw Error(Errc::InvalidInput, "sampling failed to produce distinct points");
    // inverse stereographic projection of a random rational vector
    QVector u(m - 1);
    for (int i = 0; i < m - 1; ++i) u[i] = small_rational(rng, 8, 8);
    Rational norm2 = 0;
    for (const Rational& x : u) norm2 += x * x;
    Rational denom = norm2 + 1;
    QVector sphere(m);
    for (int i = 0; i < m - 1; ++i) sphere[i] = 2 * u[i] / denom;
    sphere[m - 1] = (norm2 - 1) / denom;
    if (seen.count(sphere)) continue;
    seen.insert(sphere);

    SamplePoint p;
    p.coords.resize(amb);
    for (int i = 0; i < chart.torus_count; ++i) p.coords[i] = small_rational(rng, 12, 12);
    for (int i = 0; i < m; ++i) p.coords[chart.torus_count + i] = sphere[i];

    // angle directions
    for (int i = 0; i < chart.torus_count; ++i) {
      QVector e(amb);
      e[i] = 1;
      p.frame.push_back(std::move(e));
    }
    // sphere tangent: project coordinate directions against the outward
    // normal, dropping the most aligned one
    int drop = 0;
    Rational best = abs(sphere[0]);
    for (int i = 1; i < m; ++i) {
      Rational a = abs(sphere[i]);
      if (a > best) {
        best = a;
        drop = i;
      }
    }
    std::vector<QVector> tangent;
    for (int v = 0; v < m; ++v) {
      if (v == drop) continue;
      QVector w(m);
      for (int i = 0; i < m; ++i) w[i] = -sphere[v] * sphere[i];
      w[v] += 1;
      tangent.push_back(std::move(w));
    }
    // Frames are positively oriented for the orientation the chart's contact
    // form induces. The product convention (angles first, outward normal
    // first on the sphere block) differs from it by (-1)^{k(k-1)/2} on a
    // TkSphere chart and matches it on T2S3.
    bool flip = false;
    std::vector<QVector> oriented;
    oriented.push_back(sphere);
    for (const QVector& w : tangent) oriented.push_back(w);
    if (qdet(oriented) < 0) flip = !flip;
    if (chart.kind == ChartKind::TkSphere && (chart.k * (chart.k - 1) / 2) % 2 == 1)
      flip = !flip;
    if (flip)
      for (Rational& x : tangent.back()) x = -x;

    for (const QVector& w : tangent) {
      QVector e(amb);
      for (int i = 0; i < m; ++i) e[chart.torus_count + i] = w[i];
      p.frame.push_back(std::move(e));
    }
    out.push_back(std::move(p));
  }
  return out;
}

PolyForm beta_form(const ManifoldChart& chart) {
  if (chart.kind != ChartKind::TkSphere)
    throw Error(Errc::InvalidInput, "beta form lives on a TkSphere chart");
  const auto& vars = chart.coords;
  int k = chart.k, d = chart.d;
  PolyForm f = PolyForm::zero(vars, 1);
  for (int l = 0; l < k; ++l)
    f += PolyForm::basis(vars, {l}, Poly::variable(vars, k + l)); // x_l dth_l
  Rational half = make_rational(1, 2);
  for (int j = 0; j < d - k; ++j) {
    int ia = 2 * k + 2 * j, ib = ia + 1;
    f += PolyForm::basis(vars, {ib}, half * Poly::variable(vars, ia));  // (1/2) a db
    f -= PolyForm::basis(vars, {ia}, half * Poly::variable(vars, ib));  // -(1/2) b da
  }
  return f;
}

PolyForm alpha_eq_form(const ManifoldChart& chart) {
  if (chart.kind != ChartKind::T2S3)
    throw Error(Errc::InvalidInput, "the explicit form lives on the T2S3 chart");
  const auto& vars = chart.coords;
  Poly a1 = Poly::variable(vars, 2), b1 = Poly::variable(vars, 3);
  Poly a2 = Poly::variable(vars, 4), b2 = Poly::variable(vars, 5);
  Rational two(2), half = make_rational(1, 2);
  Poly f1 = two * (a1 * b2 - b1 * a2);
  Poly f2 = two * (a1 * a2 + b1 * b2);
  PolyForm f = PolyForm::basis(vars, {0}, f1) + PolyForm::basis(vars, {1}, f2);
  f += PolyForm::basis(vars, {3}, half * a1); // (1/2) a1 db1
  f -= PolyForm::basis(vars, {2}, half * b1);
  f -= PolyForm::basis(vars, {5}, half * a2);
  f += PolyForm::basis(vars, {4}, half * b2);
  return f;
}

PolyForm theta_form(const ManifoldChart& chart, int i) {
  if (i < 0 || i >= chart.torus_count)
    throw Error(Errc::InvalidInput, "angle index out of range");
  return PolyForm::basis(chart.coords, {i}, Poly::constant(chart.coords, 1));
}

std::vector<std::vector<Poly>> action_generators(const ManifoldChart& chart) {
  const auto& vars = chart.coords;
  int amb = chart.ambient_dim();
  std::vector<std::vector<Poly>> gens;
  auto zero_field = [&] { return std::vector<Poly>(amb, Poly::zero(vars)); };

  for (int l = 0; l < chart.torus_count; ++l) {
    std::vector<Poly> f = zero_field();
    f[static_cast<size_t>(l)] = Poly::constant(vars, 1); // d/dth_l
    gens.push_back(std::move(f));
  }
  if (chart.kind == ChartKind::TkSphere) {
    for (int j = 0; j < chart.d - chart.k; ++j) {
      int ia = 2 * chart.k + 2 * j, ib = ia + 1;
      std::vector<Poly> f = zero_field();
      f[static_cast<size_t>(ia)] = -Poly::variable(vars, ib); // -b d/da
      f[static_cast<size_t>(ib)] = Poly::variable(vars, ia);  //  a d/db
      gens.push_back(std::move(f));
    }
  } else {
    // diagonal rotation of both complex coordinates
    std::vector<Poly> f = zero_field();
    f[2] = -Poly::variable(vars, 3);
    f[3] = Poly::variable(vars, 2);
    f[4] = -Poly::variable(vars, 5);
    f[5] = Poly::variable(vars, 4);
    gens.push_back(std::move(f));
  }
  return gens;
}

std::vector<IntVector> standard_weights(const ManifoldChart& chart) {
  int rank = chart.torus_rank();
  std::vector<IntVector> w;
  for (int i = 0; i < rank; ++i) {
    IntVector v(rank);
    v[i] = 1;
    w.push_back(std::move(v));
  }
  return w;
}

} // namespace torcone
