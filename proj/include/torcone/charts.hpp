#pragma once

#include <cstdint>

#include "torcone/forms.hpp"
#include "torcone/matrix.hpp"

namespace torcone {

// Ambient product charts used by the verification engine.
//
// TkSphere(d, k) is T^k x S^{2d-k-1} sitting in T^k x R^k x C^{d-k} with
// coordinates th_1..th_k, x_1..x_k, a_1,b_1,..,a_{d-k},b_{d-k} and the unit
// sphere constraint on the non-angle block. Complex coordinates are realified
// as z_j = a_j + i b_j. k = d is the cosphere chart of T^d.
//
// T2S3 is T^2 x S^3 in T^2 x C^2 with coordinates th1, th2, a1, b1, a2, b2.
enum class ChartKind { TkSphere, T2S3 };

struct ManifoldChart {
  ChartKind kind = ChartKind::TkSphere;
  int d = 0;
  int k = 0;
  std::vector<std::string> coords;
  int torus_count = 0;  // leading angle coordinates
  int sphere_count = 0; // trailing sphere-constrained coordinates

  static ManifoldChart tk_sphere(int d, int k);
  static ManifoldChart t2s3();

  int ambient_dim() const { return torus_count + sphere_count; }
  int manifold_dim() const { return torus_count + sphere_count - 1; }
  // torus rank of the acting torus
  int torus_rank() const;
};

// Exact rational point on the chart with an orientation-consistent tangent
// frame: the angle directions first, then sphere-tangent vectors ordered so
// that (outward normal, frame) is positively oriented in the sphere block.
struct SamplePoint {
  QVector coords;
  std::vector<QVector> frame;
};

// Deterministic in seed; points distinct, sphere coordinates exactly unit
// length via stereographic projection of random rational vectors.
std::vector<SamplePoint> sample_points(const ManifoldChart& chart, int n, uint64_t seed);

// sum_l x_l dth_l + (1/2) sum_j (a_j db_j - b_j da_j) on a TkSphere chart.
PolyForm beta_form(const ManifoldChart& chart);

// The explicit T^2 x S^3 contact form: f1 dth1 + f2 dth2 + alpha', with
// f1 = 2(a1 b2 - b1 a2), f2 = 2(a1 a2 + b1 b2) and
// alpha' = (1/2)(a1 db1 - b1 da1) - (1/2)(a2 db2 - b2 da2).
PolyForm alpha_eq_form(const ManifoldChart& chart);

// dth_i, the degenerate non-contact sanity form.
PolyForm theta_form(const ManifoldChart& chart, int i);

// Infinitesimal generators of the standard torus action, one polynomial
// vector field per torus factor: angle translations, then rotation fields
// -b d/da + a d/db per complex coordinate (T2S3: the diagonal rotation).
std::vector<std::vector<Poly>> action_generators(const ManifoldChart& chart);

// Identity weights for the standard action.
std::vector<IntVector> standard_weights(const ManifoldChart& chart);

} // namespace torcone
