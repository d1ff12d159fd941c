#include "torcone/verify.hpp"

#include "torcone/error.hpp"

namespace torcone {

namespace {

struct Outcome {
  bool failed = false;
  bool has_margin = false;
  Rational margin;
};

template <typename Fn>
VerificationReport map_samples(const std::vector<SamplePoint>& pts, ExecMode mode, Fn&& fn) {
  std::vector<Outcome> res(pts.size());
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(pts.size()); ++i)
      res[static_cast<size_t>(i)] = fn(pts[static_cast<size_t>(i)]);
  } else {
    for (size_t i = 0; i < pts.size(); ++i) res[i] = fn(pts[i]);
  }
  VerificationReport rep;
  rep.checked = static_cast<long>(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    if (res[i].failed) {
      ++rep.failures;
      rep.witnesses.push_back(pts[i]);
    }
    if (res[i].has_margin && (!rep.min_margin || res[i].margin < *rep.min_margin))
      rep.min_margin = res[i].margin;
  }
  return rep;
}

} // namespace

VerificationReport verify_contact_condition(const ManifoldChart& chart, const PolyForm& alpha,
                                            int n, uint64_t seed, ExecMode mode) {
  if (alpha.vars != chart.coords)
    throw Error(Errc::VariableMismatch, "form does not live on the chart");
  int dim = chart.manifold_dim();
  PolyForm top = wedge(alpha, wedge_power(exterior_derivative(alpha), (dim - 1) / 2));
  std::vector<SamplePoint> pts = sample_points(chart, n, seed);
  return map_samples(pts, mode, [&](const SamplePoint& p) {
    Rational v = evaluate_at_frame(top, p.coords, p.frame);
    return Outcome{v <= 0, true, std::move(v)};
  });
}

std::function<QVector(const SamplePoint&)> moment_map(const ManifoldChart& chart,
                                                      const PolyForm& alpha,
                                                      const std::vector<IntVector>& weights) {
  if (alpha.degree != 1) throw Error(Errc::InvalidInput, "moment map needs a 1-form");
  if (alpha.vars != chart.coords)
    throw Error(Errc::VariableMismatch, "form does not live on the chart");
  std::vector<std::vector<Poly>> gens = action_generators(chart);
  size_t rank = gens.size();
  std::vector<Poly> mus;
  for (const IntVector& w : weights) {
    if (w.size() != rank)
      throw Error(Errc::WeightMismatch, "weight vector length differs from torus rank");
    std::vector<Poly> field(chart.coords.size(), Poly::zero(chart.coords));
    for (size_t j = 0; j < rank; ++j) {
      if (w[j] == 0) continue;
      Rational c(w[j]);
      for (size_t v = 0; v < field.size(); ++v) field[v] += c * gens[j][v];
    }
    PolyForm contraction = interior_product(field, alpha);
    Poly mu = contraction.comps.empty() ? Poly::zero(chart.coords)
                                        : contraction.comps.begin()->second;
    mus.push_back(std::move(mu));
  }
  return [mus](const SamplePoint& p) {
    QVector out;
    out.reserve(mus.size());
    for (const Poly& mu : mus) out.push_back(mu.eval(p.coords));
    return out;
  };
}

VerificationReport verify_moment_containment(int d, int k, int n, uint64_t seed, ExecMode mode) {
  ManifoldChart chart = ManifoldChart::tk_sphere(d, k);
  auto mu = moment_map(chart, beta_form(chart), standard_weights(chart));
  std::vector<SamplePoint> pts = sample_points(chart, n, seed);
  return map_samples(pts, mode, [&, d, k](const SamplePoint& p) {
    QVector img = mu(p);
    Outcome o;
    for (int j = k; j < d; ++j) {
      const Rational& v = img[static_cast<size_t>(j)];
      if (v < 0) o.failed = true;
      if (!o.has_margin || v < o.margin) {
        o.margin = v;
        o.has_margin = true;
      }
    }
    return o;
  });
}

VerificationReport verify_moment_cosphere(int d, int n, uint64_t seed, ExecMode mode) {
  ManifoldChart chart = ManifoldChart::tk_sphere(d, d);
  auto mu = moment_map(chart, beta_form(chart), standard_weights(chart));
  std::vector<SamplePoint> pts = sample_points(chart, n, seed);
  return map_samples(pts, mode, [&](const SamplePoint& p) {
    QVector img = mu(p);
    Rational norm2 = 0;
    for (const Rational& v : img) norm2 += v * v;
    return Outcome{norm2 != 1, false, {}};
  });
}

StrongFillingReport verify_strong_filling(int d, int k) {
  ManifoldChart chart = ManifoldChart::tk_sphere(d, k);
  const auto& vars = chart.coords;

  PolyForm omega = PolyForm::zero(vars, 2);
  for (int l = 0; l < k; ++l)
    omega += PolyForm::basis(vars, {k + l, l}, Poly::constant(vars, 1)); // dx_l ^ dth_l
  for (int j = 0; j < d - k; ++j) {
    int ia = 2 * k + 2 * j;
    omega += PolyForm::basis(vars, {ia, ia + 1}, Poly::constant(vars, 1)); // da ^ db
  }

  // radial Liouville field: sum x_l d/dx_l + (1/2) sum (a d/da + b d/db)
  std::vector<Poly> X(vars.size(), Poly::zero(vars));
  Rational half = make_rational(1, 2);
  for (int l = 0; l < k; ++l) X[static_cast<size_t>(k + l)] = Poly::variable(vars, k + l);
  for (int j = 0; j < 2 * (d - k); ++j) {
    int v = 2 * k + j;
    X[static_cast<size_t>(v)] = half * Poly::variable(vars, v);
  }

  PolyForm iota = interior_product(X, omega);
  StrongFillingReport out;
  out.cartan_diff = exterior_derivative(iota) - omega;
  out.boundary_diff = iota - beta_form(chart);
  out.cartan_identity = out.cartan_diff.is_zero();
  out.boundary_identity = out.boundary_diff.is_zero();
  out.report.checked = 2;
  out.report.failures = (out.cartan_identity ? 0 : 1) + (out.boundary_identity ? 0 : 1);
  return out;
}

namespace {

using TTable = std::vector<std::vector<PolyForm>>;

TTable table_zero(const std::vector<std::string>& vars, int imax, int jmax, int degree) {
  return TTable(static_cast<size_t>(imax + 1),
                std::vector<PolyForm>(static_cast<size_t>(jmax + 1), PolyForm::zero(vars, degree)));
}

TTable wedge_tables(const TTable& a, const TTable& b, const std::vector<std::string>& vars) {
  int ai = static_cast<int>(a.size()) - 1, aj = static_cast<int>(a[0].size()) - 1;
  int bi = static_cast<int>(b.size()) - 1, bj = static_cast<int>(b[0].size()) - 1;
  int degree = a[0][0].degree + b[0][0].degree;
  TTable r = table_zero(vars, ai + bi, aj + bj, degree);
  for (int i1 = 0; i1 <= ai; ++i1)
    for (int j1 = 0; j1 <= aj; ++j1) {
      if (a[i1][j1].is_zero()) continue;
      for (int i2 = 0; i2 <= bi; ++i2)
        for (int j2 = 0; j2 <= bj; ++j2) {
          if (b[i2][j2].is_zero()) continue;
          r[i1 + i2][j1 + j2] += wedge(a[i1][j1], b[i2][j2]);
        }
    }
  return r;
}

} // namespace

WeakFillForms weak_fill_forms() {
  WeakFillForms wf{ManifoldChart::t2s3(), {}, {}, {}, {}, {}, {}};
  const auto& vars = wf.chart.coords;
  PolyForm alpha_full = alpha_eq_form(wf.chart);

  Rational half = make_rational(1, 2);
  Poly a1 = Poly::variable(vars, 2), b1 = Poly::variable(vars, 3);
  Poly a2 = Poly::variable(vars, 4), b2 = Poly::variable(vars, 5);
  wf.alpha_prime = PolyForm::basis(vars, {3}, half * a1) - PolyForm::basis(vars, {2}, half * b1) -
                   PolyForm::basis(vars, {5}, half * a2) + PolyForm::basis(vars, {4}, half * b2);
  wf.gamma = alpha_full - wf.alpha_prime; // f1 dth1 + f2 dth2
  wf.omega = exterior_derivative(wf.alpha_prime);
  wf.dgamma = exterior_derivative(wf.gamma);
  // torus volume oriented so that alpha' ^ omega ^ vol is positive in the
  // orientation fixed by the contact form; for this alpha that is dth2^dth1
  wf.theta12 = PolyForm::basis(vars, {1, 0}, Poly::constant(vars, 1));

  // alpha_t = alpha' + t gamma;  base = (omega + th12) + tau omega + t tau dgamma
  TTable alpha_t = table_zero(vars, 1, 0, 1);
  alpha_t[0][0] = wf.alpha_prime;
  alpha_t[1][0] = wf.gamma;
  TTable base = table_zero(vars, 1, 1, 2);
  base[0][0] = wf.omega + wf.theta12;
  base[0][1] = wf.omega;
  base[1][1] = wf.dgamma;
  wf.P = wedge_tables(wedge_tables(alpha_t, base, vars), base, vars);
  return wf;
}

PolyForm weak_fill_polynomial(const Rational& t, const Rational& tau) {
  WeakFillForms wf = weak_fill_forms();
  PolyForm out = PolyForm::zero(wf.chart.coords, 5);
  Rational tp = 1;
  for (size_t i = 0; i < wf.P.size(); ++i) {
    Rational taup = 1;
    for (size_t j = 0; j < wf.P[i].size(); ++j) {
      out += Rational(tp * taup) * wf.P[i][j];
      taup *= tau;
    }
    tp *= t;
  }
  return out;
}

WeakFillResult verify_weak_fill(int n, const std::vector<Rational>& tau_grid, uint64_t seed,
                                ExecMode mode) {
  for (const Rational& tau : tau_grid)
    if (tau < 0) throw Error(Errc::InvalidInput, "tau grid must be nonnegative");
  if (tau_grid.empty()) throw Error(Errc::InvalidInput, "tau grid is empty");

  WeakFillForms wf = weak_fill_forms();
  std::vector<SamplePoint> pts = sample_points(wf.chart, n, seed);
  size_t ni = wf.P.size(), nj = wf.P[0].size();

  // frame values of every coefficient form, sample-parallel
  std::vector<std::vector<Rational>> vals(pts.size(),
                                          std::vector<Rational>(ni * nj));
  auto eval_one = [&](size_t s) {
    FrameEvaluator fe(pts[s].coords, pts[s].frame);
    for (size_t i = 0; i < ni; ++i)
      for (size_t j = 0; j < nj; ++j) vals[s][i * nj + j] = fe(wf.P[i][j]);
  };
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (long s = 0; s < static_cast<long>(pts.size()); ++s) eval_one(static_cast<size_t>(s));
  } else {
    for (size_t s = 0; s < pts.size(); ++s) eval_one(s);
  }

  Rational t(1);
  for (int halvings = 0; halvings <= 20; ++halvings) {
    bool ok = true;
    std::optional<Rational> min_margin;
    for (size_t s = 0; s < pts.size() && ok; ++s) {
      // collapse the t direction once per sample
      std::vector<Rational> ptau(nj, Rational(0));
      Rational tp = 1;
      for (size_t i = 0; i < ni; ++i) {
        for (size_t j = 0; j < nj; ++j) ptau[j] += tp * vals[s][i * nj + j];
        tp *= t;
      }
      for (const Rational& tau : tau_grid) {
        Rational pv = 0, dv = 0, taup = 1;
        for (size_t j = 0; j < nj; ++j) {
          pv += ptau[j] * taup;
          if (j + 1 < nj) dv += Rational(static_cast<long>(j + 1)) * ptau[j + 1] * taup;
          taup *= tau;
        }
        if (pv <= 0 || dv <= 0) {
          ok = false;
          break;
        }
        const Rational& smaller = (pv < dv) ? pv : dv;
        if (!min_margin || smaller < *min_margin) min_margin = smaller;
      }
    }
    if (ok) {
      WeakFillResult out;
      out.t_star = t;
      out.report.checked = static_cast<long>(pts.size() * tau_grid.size() * 2);
      out.report.failures = 0;
      out.report.min_margin = min_margin;
      return out;
    }
    t /= 2;
  }
  throw Error(Errc::NoPositiveT, "no t in {1,...,2^-20} makes dP/dtau positive everywhere");
}

} // namespace torcone
