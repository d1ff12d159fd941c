#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torcone/error.hpp"
#include "torcone/verify.hpp"

using namespace torcone;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

const std::vector<Rational> kTauGrid = {Rational(0), Rational(1), Rational(10), Rational(100)};

} // namespace

TEST_CASE("contact condition holds for the boundary forms") {
  for (auto [d, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 4}}) {
    ManifoldChart chart = ManifoldChart::tk_sphere(d, k);
    VerificationReport r = verify_contact_condition(chart, beta_form(chart), 50, 7);
    CHECK(r.checked == 50);
    CHECK(r.failures == 0);
    CHECK(r.witnesses.empty());
    REQUIRE(r.min_margin.has_value());
    CHECK(*r.min_margin > 0);
  }
  ManifoldChart t2s3 = ManifoldChart::t2s3();
  VerificationReport r = verify_contact_condition(t2s3, alpha_eq_form(t2s3), 50, 7);
  CHECK(r.failures == 0);
  CHECK(*r.min_margin > 0);
}

TEST_CASE("the degenerate angle form fails everywhere") {
  ManifoldChart chart = ManifoldChart::tk_sphere(3, 2);
  VerificationReport r = verify_contact_condition(chart, theta_form(chart, 0), 30, 7);
  CHECK(r.checked == 30);
  CHECK(r.failures == 30);
  CHECK(r.witnesses.size() == 30);
  CHECK(*r.min_margin == 0);
}

TEST_CASE("serial and parallel verification agree exactly") {
  ManifoldChart chart = ManifoldChart::tk_sphere(3, 2);
  VerificationReport a = verify_contact_condition(chart, beta_form(chart), 40, 13, ExecMode::Serial);
  VerificationReport b =
      verify_contact_condition(chart, beta_form(chart), 40, 13, ExecMode::Parallel);
  CHECK(a.checked == b.checked);
  CHECK(a.failures == b.failures);
  CHECK(a.min_margin == b.min_margin);

  WeakFillResult ws = verify_weak_fill(30, kTauGrid, 13, ExecMode::Serial);
  WeakFillResult wp = verify_weak_fill(30, kTauGrid, 13, ExecMode::Parallel);
  CHECK(ws.t_star == wp.t_star);
  CHECK(ws.report.checked == wp.report.checked);
  CHECK(ws.report.min_margin == wp.report.min_margin);

  VerificationReport ms = verify_moment_containment(3, 1, 40, 13, ExecMode::Serial);
  VerificationReport mp = verify_moment_containment(3, 1, 40, 13, ExecMode::Parallel);
  CHECK(ms.failures == mp.failures);
  CHECK(ms.min_margin == mp.min_margin);
}

TEST_CASE("moment map of the boundary form") {
  // mu = (x_1, |z_1|^2/2, |z_2|^2/2) on the (d,k) = (3,1) chart
  ManifoldChart chart = ManifoldChart::tk_sphere(3, 1);
  auto mu = moment_map(chart, beta_form(chart), standard_weights(chart));
  for (const SamplePoint& p : sample_points(chart, 25, 19)) {
    QVector img = mu(p);
    REQUIRE(img.size() == 3);
    CHECK(img[0] == p.coords[1]); // x1
    CHECK(img[1] == (p.coords[2] * p.coords[2] + p.coords[3] * p.coords[3]) / 2);
    CHECK(img[2] == (p.coords[4] * p.coords[4] + p.coords[5] * p.coords[5]) / 2);
  }
}

TEST_CASE("moment image containment and cosphere normalization") {
  for (auto [d, k] : {std::pair{3, 1}, {3, 2}, {4, 2}}) {
    VerificationReport r = verify_moment_containment(d, k, 50, 23);
    CHECK(r.failures == 0);
    REQUIRE(r.min_margin.has_value());
    CHECK(*r.min_margin >= 0);
  }
  for (int d : {3, 4}) {
    VerificationReport r = verify_moment_cosphere(d, 50, 23);
    CHECK(r.checked == 50);
    CHECK(r.failures == 0);
  }
  // the cosphere moment image is the sphere coordinate vector itself
  ManifoldChart chart = ManifoldChart::tk_sphere(3, 3);
  auto mu = moment_map(chart, beta_form(chart), standard_weights(chart));
  for (const SamplePoint& p : sample_points(chart, 10, 29)) {
    QVector img = mu(p);
    for (int i = 0; i < 3; ++i) CHECK(img[static_cast<size_t>(i)] == p.coords[static_cast<size_t>(3 + i)]);
  }
}

TEST_CASE("moment map handles general weights") {
  ManifoldChart chart = ManifoldChart::tk_sphere(2, 1);
  PolyForm beta = beta_form(chart);
  auto zero = moment_map(chart, beta, {iv({0, 0})});
  auto combo = moment_map(chart, beta, {iv({2, -3})});
  auto standard = moment_map(chart, beta, standard_weights(chart));
  for (const SamplePoint& p : sample_points(chart, 10, 31)) {
    CHECK(zero(p)[0] == 0);
    QVector s = standard(p);
    CHECK(combo(p)[0] == 2 * s[0] - 3 * s[1]);
  }
  CHECK_THROWS_AS(moment_map(chart, beta, {iv({1, 0, 0})}), Error);
}

TEST_CASE("strong filling identities hold exactly") {
  for (auto [d, k] : {std::pair{2, 2}, {3, 1}, {3, 2}, {4, 2}}) {
    StrongFillingReport r = verify_strong_filling(d, k);
    CHECK(r.cartan_identity);
    CHECK(r.boundary_identity);
    CHECK(r.cartan_diff.is_zero());
    CHECK(r.boundary_diff.is_zero());
    CHECK(r.report.checked == 2);
    CHECK(r.report.failures == 0);
  }
  CHECK_THROWS_AS(verify_strong_filling(3, 0), Error);
}

TEST_CASE("weak fill polynomial constant term") {
  WeakFillForms wf = weak_fill_forms();
  // at tau = 0 the ambient polynomial is P[0][0] + t P[1][0], with
  // P[0][0] = 2 alpha' ^ omega ^ vol exactly
  PolyForm expect = Rational(2) * wedge(wedge(wf.alpha_prime, wf.omega), wf.theta12);
  CHECK(wf.P[0][0] == expect);
  for (size_t i = 2; i < wf.P.size(); ++i) CHECK(wf.P[i][0].is_zero());
  // the t-linear leftover vanishes on every tangent frame
  std::vector<SamplePoint> pts = sample_points(wf.chart, 30, 37);
  for (const SamplePoint& p : pts)
    CHECK(evaluate_at_frame(wf.P[1][0], p.coords, p.frame) == 0);
  // hence P_t(0) restricted to frames equals the positive volume for any t
  for (const Rational& t : {Rational(1), make_rational(1, 8), Rational(5)}) {
    PolyForm pt0 = weak_fill_polynomial(t, Rational(0));
    for (const SamplePoint& p : pts)
      CHECK(evaluate_at_frame(pt0, p.coords, p.frame) ==
            evaluate_at_frame(expect, p.coords, p.frame));
  }
}

TEST_CASE("weak fill derivative matches the three-term expansion") {
  WeakFillForms wf = weak_fill_forms();
  const PolyForm &ap = wf.alpha_prime, &om = wf.omega, &ga = wf.gamma, &dg = wf.dgamma,
                 &th = wf.theta12;
  PolyForm om2 = wedge(om, om);
  PolyForm omdg = wedge(om, dg);
  PolyForm dg2 = wedge(dg, dg);

  // C(t) = alpha_t ^ (d alpha_t)^2, coefficients in t
  std::vector<PolyForm> C = {
      wedge(ap, om2),
      wedge(ga, om2) + Rational(2) * wedge(ap, omdg),
      Rational(2) * wedge(ga, omdg) + wedge(ap, dg2),
      wedge(ga, dg2),
  };
  // S(t) = 2 alpha_t ^ d alpha_t ^ vol
  std::vector<PolyForm> S = {
      Rational(2) * wedge(wedge(ap, om), th),
      Rational(2) * (wedge(wedge(ga, om), th) + wedge(wedge(ap, dg), th)),
      Rational(2) * wedge(wedge(ga, dg), th),
  };
  // T(t) = 2 alpha_t ^ omega ^ d alpha_t
  std::vector<PolyForm> T = {
      Rational(2) * wedge(ap, om2),
      Rational(2) * (wedge(ga, om2) + wedge(ap, omdg)),
      Rational(2) * wedge(ga, omdg),
  };

  // expected dP/dtau = 2 tau C(t) + S(t) + T(t), as a (t, tau) table
  for (size_t i = 0; i < wf.P.size(); ++i) {
    for (size_t j = 0; j + 1 < wf.P[i].size(); ++j) {
      PolyForm derivative = Rational(static_cast<long>(j + 1)) * wf.P[i][j + 1];
      PolyForm expected = PolyForm::zero(wf.chart.coords, 5);
      if (j == 1 && i < C.size()) expected += Rational(2) * C[i];
      if (j == 0) {
        if (i < S.size()) expected += S[i];
        if (i < T.size()) expected += T[i];
      }
      CHECK(derivative == expected);
    }
  }
}

TEST_CASE("finite differences of the weak fill polynomial") {
  // P is quadratic in tau, so (P(tau+h) - P(tau))/h - dP/dtau = h * C(t)
  WeakFillForms wf = weak_fill_forms();
  Rational t = make_rational(1, 3), tau = make_rational(2, 5), h = make_rational(1, 7);
  PolyForm fd = make_rational(7, 1) * (weak_fill_polynomial(t, tau + h) - weak_fill_polynomial(t, tau));
  PolyForm dP = PolyForm::zero(wf.chart.coords, 5);
  Rational tp = 1;
  for (size_t i = 0; i < wf.P.size(); ++i) {
    Rational taup = 1;
    for (size_t j = 1; j < wf.P[i].size(); ++j) {
      dP += Rational(static_cast<long>(j)) * Rational(tp * taup) * wf.P[i][j];
      taup *= tau;
    }
    tp *= t;
  }
  PolyForm C_t = PolyForm::zero(wf.chart.coords, 5);
  tp = 1;
  for (size_t i = 0; i < wf.P.size(); ++i) {
    C_t += Rational(tp) * wf.P[i][2];
    tp *= t;
  }
  CHECK(fd - dP == h * C_t);
}

TEST_CASE("weak fill positivity search") {
  WeakFillResult w = verify_weak_fill(40, kTauGrid, 7);
  CHECK(w.t_star > 0);
  CHECK(w.t_star <= 1);
  // power of two: numerator 1, denominator a power of two
  CHECK(w.t_star.get_num() == 1);
  Integer den = w.t_star.get_den();
  while (den % 2 == 0) den /= 2;
  CHECK(den == 1);
  CHECK(w.report.failures == 0);
  CHECK(w.report.checked == 40 * 4 * 2);
  REQUIRE(w.report.min_margin.has_value());
  CHECK(*w.report.min_margin > 0);

  // deterministic
  WeakFillResult again = verify_weak_fill(40, kTauGrid, 7);
  CHECK(again.t_star == w.t_star);
  CHECK(again.report.min_margin == w.report.min_margin);

  CHECK_THROWS_AS(verify_weak_fill(10, {}, 7), Error);
  CHECK_THROWS_AS(verify_weak_fill(10, {Rational(-1)}, 7), Error);
}
