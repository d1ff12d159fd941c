#include "torcone/classify.hpp"

#include "torcone/error.hpp"

namespace torcone {

const char* verdict_name(VerdictTag t) {
  switch (t) {
    case VerdictTag::StronglyFillable: return "StronglyFillable";
    case VerdictTag::WeaklyFillableOnly: return "WeaklyFillableOnly";
    case VerdictTag::WeaklyFillableStrongOpen: return "WeaklyFillableStrongOpen";
    case VerdictTag::Overtwisted: return "Overtwisted";
  }
  return "?";
}

namespace {

std::string product_label(int k, int sphere_dim) {
  return "T^" + std::to_string(k) + " × S^" + std::to_string(sphere_dim);
}

ClassificationResult reeb_type_result(const Cone& c, const std::string& label, int dim_cap) {
  ClassificationResult r;
  r.manifold = label;
  r.reeb_type = true;
  r.verdict.tag = VerdictTag::StronglyFillable;
  IntVector R = reeb_vector(c, dim_cap);
  r.witnesses.slice = slice(c, R, dim_cap);
  r.witnesses.reeb = std::move(R);
  return r;
}

ClassificationResult overtwisted_result() {
  ClassificationResult r;
  r.manifold = "lens-type (overtwisted)";
  r.reeb_type = false;
  r.verdict.tag = VerdictTag::Overtwisted;
  return r;
}

ClassificationResult s1s2_result() {
  ClassificationResult r;
  r.manifold = "S^1 × S^2";
  r.reeb_type = false;
  r.verdict.tag = VerdictTag::StronglyFillable;
  return r;
}

// 3-manifold cones arrive as honest 2-dimensional convex cones; the reflex
// and full-circle shapes are only expressible through AnglePair.
ClassificationResult classify_2d_cone(const Cone& c, int dim_cap) {
  LinealityReport lr = lineality(c, dim_cap);
  if (lr.dimension == 2) return overtwisted_result();
  Cone cc = dual_description(c, dim_cap);
  if (lr.dimension == 1) {
    // one facet: half-plane, the straight-angle case; two: a line, not a
    // moment cone
    if (cc.facet_normals->size() != 1)
      throw Error(Errc::InvalidInput, "degenerate 2-dimensional cone");
    return s1s2_result();
  }
  if (cc.generators->size() != 2)
    throw Error(Errc::InvalidInput, "2-dimensional moment cone needs two boundary rays");
  return reeb_type_result(cc, "lens-type (Reeb)", dim_cap);
}

} // namespace

ClassificationResult classify_3_nonfree(const AnglePair& a) {
  IntVector r1 = a.ray1, r2 = a.ray2;
  if (r1.size() != 2 || r2.size() != 2)
    throw Error(Errc::InvalidAnglePair, "angle rays must be 2-dimensional");
  if (is_zero(r1) || is_zero(r2))
    throw Error(Errc::InvalidAnglePair, "angle rays must be nonzero");
  primitivize(r1);
  primitivize(r2);
  if (a.wraps_full_circle) return overtwisted_result(); // moment cone is the whole plane
  Integer cross = r1[0] * r2[1] - r1[1] * r2[0];
  if (cross > 0) {
    Cone c = cone_from_generators(2, {r1, r2});
    return reeb_type_result(c, "lens-type (Reeb)", kDefaultDimCap);
  }
  if (cross < 0) return overtwisted_result();
  Integer d = dot(r1, r2);
  if (d < 0) return s1s2_result();
  throw Error(Errc::InvalidAnglePair,
              "parallel rays span an angle of 0 or a full turn; set the wrap flag");
}

ClassificationResult classify_3_free(long k) {
  if (k < 1) throw Error(Errc::InvalidInput, "fiber-component count must be positive");
  ClassificationResult r;
  r.manifold = "T^3 with ξ_" + std::to_string(k);
  r.reeb_type = false;
  r.verdict.tag = (k == 1) ? VerdictTag::StronglyFillable : VerdictTag::WeaklyFillableOnly;
  return r;
}

ClassificationResult classify_higher_nonfree(const Cone& c, int dim_cap) {
  int d = c.dim;
  if (d < 3) throw Error(Errc::InvalidInput, "higher-dimensional cone needs dim >= 3");
  LinealityReport lr = lineality(c, dim_cap);
  if (lr.dimension == d)
    throw Error(Errc::WholeSpaceCone,
                "whole-space moment cones with a non-free action exist only in dimension three");
  if (lr.dimension == 0) return reeb_type_result(c, "Reeb-type (prequantization)", dim_cap);

  int k = lr.dimension;
  ClassificationResult r;
  try {
    r.witnesses.standard_form = normalize_to_standard(c, dim_cap);
  } catch (const Error& e) {
    if (e.code == Errc::NotUnimodular)
      throw Error(Errc::UnclassifiableCone, e.what());
    throw;
  }
  r.manifold = product_label(k, 2 * d - k - 1);
  r.reeb_type = false;
  r.verdict.tag = VerdictTag::StronglyFillable;
  r.verdict.stein_note = std::to_string(d - k) + "-subcritical Stein";
  return r;
}

ClassificationResult classify_higher_free(const FreeTriple& t) {
  if (t.triple.size() != 3) throw Error(Errc::InvalidInput, "bundle triple must have 3 entries");
  if (is_zero(t.triple)) {
    ClassificationResult r;
    r.manifold = product_label(3, 2); // cosphere bundle of T^3
    r.reeb_type = false;
    r.verdict.tag = VerdictTag::StronglyFillable;
    r.verdict.stein_note = "Stein";
    return r;
  }
  GcdReduction red = gcd_reduce(t.triple);
  ClassificationResult r;
  r.manifold = "T^2 × L_" + red.g.get_str();
  r.reeb_type = false;
  r.verdict.tag = VerdictTag::WeaklyFillableStrongOpen;
  r.witnesses.triple_reduction = TripleReduction{red.g, red.U};
  return r;
}

ClassificationResult classify_higher_free(const FreeTrivial& t) {
  if (t.dim < 4)
    throw Error(Errc::InvalidInput,
                "trivial-bundle input needs dim >= 4; use a triple for dimension three");
  ClassificationResult r;
  r.manifold = product_label(t.dim, t.dim - 1); // cosphere bundle of T^d
  r.reeb_type = false;
  r.verdict.tag = VerdictTag::StronglyFillable;
  r.verdict.stein_note = "Stein";
  return r;
}

ClassificationResult classify(const ToricInput& input, int dim_cap) {
  struct Visitor {
    int dim_cap;
    ClassificationResult operator()(const Cone& c) const {
      if (c.dim < 2) throw Error(Errc::InvalidInput, "cone dimension must be at least 2");
      if (c.dim == 2) return classify_2d_cone(c, dim_cap);
      return classify_higher_nonfree(c, dim_cap);
    }
    ClassificationResult operator()(const AnglePair& a) const { return classify_3_nonfree(a); }
    ClassificationResult operator()(const FreeTriple& t) const { return classify_higher_free(t); }
    ClassificationResult operator()(const FreeTorus3& t) const { return classify_3_free(t.k); }
    ClassificationResult operator()(const FreeTrivial& t) const { return classify_higher_free(t); }
  };
  return std::visit(Visitor{dim_cap}, input);
}

} // namespace torcone
