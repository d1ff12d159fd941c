#pragma once

#include <optional>
#include <vector>

#include "torcone/lattice.hpp"
#include "torcone/matrix.hpp"

namespace torcone {

// Upper bound on the dimension accepted by the double-description code.
// The CLI lets TORCONE_DIM_CAP override it.
inline constexpr int kDefaultDimCap = 6;

// Rational polyhedral cone with one or both descriptions. Stored vectors are
// primitive, nonzero, duplicate-free and sorted; a cone with lineality lists
// antipodal generator pairs explicitly. An empty facet-normal list describes
// the whole space.
struct Cone {
  int dim = 0;
  std::optional<std::vector<IntVector>> generators;
  std::optional<std::vector<IntVector>> facet_normals;
};

Cone cone_from_generators(int dim, std::vector<IntVector> gens);
Cone cone_from_facet_normals(int dim, std::vector<IntVector> normals);
Cone cone_from_both(int dim, std::vector<IntVector> gens, std::vector<IntVector> normals);

// Minimal generating data of {y : <a,y> >= 0 for all a}: a lineality basis
// and the extreme rays modulo that lineality. Motzkin-Burger insertion with
// the algebraic (rank) adjacency test, exact throughout.
struct DDResult {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};
DDResult dual_from_constraints(int dim, const std::vector<IntVector>& constraints);

// Fills in the missing description (and canonicalizes both to minimal form).
// With both descriptions supplied, verifies they agree and throws
// Errc::InvalidInput otherwise.
Cone dual_description(const Cone& c, int dim_cap = kDefaultDimCap);

struct LinealityReport {
  int dimension = 0;
  std::vector<IntVector> lattice_basis; // saturated basis of span /\ Z^d
};
LinealityReport lineality(const Cone& c, int dim_cap = kDefaultDimCap);

bool is_strictly_convex(const Cone& c, int dim_cap = kDefaultDimCap);
bool is_whole_space(const Cone& c, int dim_cap = kDefaultDimCap);

// SL(d,Z) map U with U * cone = {x_1,...,x_{d-k} >= 0}, k the lineality
// dimension. Throws Errc::NotApplicable for strictly convex or whole-space
// cones and Errc::NotUnimodular when the facet normals are not a basis of
// the quotient-dual lattice.
struct StandardFormWitness {
  int k = 0;
  UnimodularWitness U;
};
StandardFormWitness normalize_to_standard(const Cone& c, int dim_cap = kDefaultDimCap);

// Sum of the primitive inward facet normals; integral and interior to the
// dual cone of a strictly convex cone.
IntVector reeb_vector(const Cone& c, int dim_cap = kDefaultDimCap);

struct SlicePolytope {
  IntVector reeb;
  std::vector<QVector> vertices;
  bool bounded = false;
};
// Cross-section cone /\ {<R,x> = 1}. bounded is true exactly when every
// generator pairs strictly positively with R.
SlicePolytope slice(const Cone& c, const IntVector& R, int dim_cap = kDefaultDimCap);

} // namespace torcone
