#pragma once

#include <optional>
#include <string>
#include <variant>

#include "torcone/cone.hpp"
#include "torcone/lattice.hpp"

namespace torcone {

enum class VerdictTag {
  StronglyFillable,
  WeaklyFillableOnly,
  WeaklyFillableStrongOpen,
  Overtwisted,
};

const char* verdict_name(VerdictTag t);

struct FillabilityVerdict {
  VerdictTag tag = VerdictTag::StronglyFillable;
  std::optional<std::string> stein_note;
};

// Boundary data of a 3-manifold moment cone: two primitive rays listed in
// angular order, plus a flag for an angle of at least a full turn. The sign
// of cross(ray1, ray2) separates angles below and above pi exactly.
struct AnglePair {
  IntVector ray1;
  IntVector ray2;
  bool wraps_full_circle = false;
};

struct FreeTriple {
  IntVector triple; // dim 3; the zero triple is the trivial bundle
};

struct FreeTorus3 {
  long k = 1; // connected components of the moment-map fibers
};

struct FreeTrivial {
  int dim = 4; // torus rank d >= 4; d = 3 goes through FreeTriple{0,0,0}
};

using ToricInput = std::variant<Cone, AnglePair, FreeTriple, FreeTorus3, FreeTrivial>;

struct TripleReduction {
  Integer g;
  UnimodularWitness U;
};

struct ClassificationWitnesses {
  std::optional<StandardFormWitness> standard_form;
  std::optional<IntVector> reeb;
  std::optional<SlicePolytope> slice;
  std::optional<TripleReduction> triple_reduction;
};

struct ClassificationResult {
  std::string manifold;
  bool reeb_type = false;
  FillabilityVerdict verdict;
  ClassificationWitnesses witnesses;
};

ClassificationResult classify(const ToricInput& input, int dim_cap = kDefaultDimCap);

ClassificationResult classify_3_nonfree(const AnglePair& a);
ClassificationResult classify_3_free(long k);
ClassificationResult classify_higher_nonfree(const Cone& c, int dim_cap = kDefaultDimCap);
ClassificationResult classify_higher_free(const FreeTriple& t);
ClassificationResult classify_higher_free(const FreeTrivial& t);

} // namespace torcone
