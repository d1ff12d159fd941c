#pragma once

#include <json.hpp>

#include "torcone/classify.hpp"
#include "torcone/verify.hpp"

namespace torcone {

using nlohmann::json;

// Cone JSON: {"dim": 3, "generators": [["1","0","0"], ...],
//             "facet_normals": [...], "winding": "convex|straight|reflex|full"}
// Entries are decimal integer or "p/q" strings (JSON integers also accepted);
// rational vectors are scaled to primitive integer vectors exactly. The
// winding tag is only meaningful for dim 2 and turns the two listed
// generators into an ordered angle pair.
ToricInput toric_input_from_cone_json(const json& j);

json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const QVector& v);
json to_json(const UnimodularWitness& w);
json to_json(const SlicePolytope& s);
json to_json(const StandardFormWitness& w);
json to_json(const TripleReduction& r);
json to_json(const ClassificationResult& r);
json to_json(const VerificationReport& r);
json to_json(const Cone& c);
// {"degree": q, "components": {"i,j,...": "coefficient polynomial", ...}}
json to_json(const PolyForm& f);

} // namespace torcone
