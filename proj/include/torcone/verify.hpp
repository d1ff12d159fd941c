#pragma once

#include <functional>
#include <optional>

#include "torcone/charts.hpp"

namespace torcone {

// Every checker exists in two flavors behind one entry point: a serial
// reference loop and an OpenMP loop over samples. Exact arithmetic makes the
// two bit-identical; tests compare them and tools/bench_verify times them.
enum class ExecMode { Serial, Parallel };

struct VerificationReport {
  long checked = 0;
  long failures = 0;
  std::vector<SamplePoint> witnesses; // the failing samples
  std::optional<Rational> min_margin; // smallest positivity value seen
};

// Positivity of alpha ^ (d alpha)^{(dim-1)/2} on every sampled frame.
VerificationReport verify_contact_condition(const ManifoldChart& chart, const PolyForm& alpha,
                                            int n, uint64_t seed,
                                            ExecMode mode = ExecMode::Parallel);

// Exact moment map p -> (alpha_p(X_1), ..., alpha_p(X_rank)) for the action
// weights given as integer combinations of the standard generators.
std::function<QVector(const SamplePoint&)> moment_map(const ManifoldChart& chart,
                                                      const PolyForm& alpha,
                                                      const std::vector<IntVector>& weights);

// Image containment for the TkSphere moment map: the last d-k coordinates
// stay nonnegative, landing in the standard cone.
VerificationReport verify_moment_containment(int d, int k, int n, uint64_t seed,
                                             ExecMode mode = ExecMode::Parallel);

// Cosphere chart: the moment image lies on the unit sphere exactly.
VerificationReport verify_moment_cosphere(int d, int n, uint64_t seed,
                                          ExecMode mode = ExecMode::Parallel);

// The two filling identities on T^k x D^{2d-k}: with
// omega = sum dx^dth + sum da^db and the radial field X,
// (i) d(iota_X omega) = omega and (ii) iota_X omega equals the ambient
// 1-form of the boundary contact structure. Exact symbolic checks; the
// nonzero differences are reported when an identity fails.
struct StrongFillingReport {
  bool cartan_identity = false;
  bool boundary_identity = false;
  PolyForm cartan_diff;
  PolyForm boundary_diff;
  VerificationReport report;
};
StrongFillingReport verify_strong_filling(int d, int k);

// Bi-parameter table of the weak-filling polynomial
// P_t(tau) = alpha_t ^ (omega + dth1^dth2 + tau d alpha_t)^2 on T^2 x S^3,
// alpha_t = t(f1 dth1 + f2 dth2) + alpha': coefficient forms of t^i tau^j.
struct WeakFillForms {
  ManifoldChart chart;
  PolyForm alpha_prime;
  PolyForm omega;   // d alpha'
  PolyForm gamma;   // f1 dth1 + f2 dth2
  PolyForm dgamma;
  PolyForm theta12; // dth1 ^ dth2
  std::vector<std::vector<PolyForm>> P; // P[i][j], i <= 3, j <= 2
};
WeakFillForms weak_fill_forms();

// P_t(tau) for concrete scalar parameters.
PolyForm weak_fill_polynomial(const Rational& t, const Rational& tau);

// Halving search for the largest t = 2^-n <= 1 with dP_t/dtau > 0 at every
// sample and tau grid point; also checks P_t(tau) > 0 there. Throws
// Errc::NoPositiveT below 2^-20.
struct WeakFillResult {
  Rational t_star;
  VerificationReport report;
};
WeakFillResult verify_weak_fill(int n, const std::vector<Rational>& tau_grid, uint64_t seed,
                                ExecMode mode = ExecMode::Parallel);

} // namespace torcone
