#include "torcone/json_io.hpp"

#include "torcone/error.hpp"

namespace torcone {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::ParseError, "expected an integer or a \"p/q\" string");
}

// Exact rational vectors scale to primitive integer vectors.
IntVector int_vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "expected a nonempty array");
  QVector q;
  for (const json& e : j) q.push_back(rational_from_json(e));
  Integer lcm = 1;
  for (const Rational& x : q) {
    Integer den = x.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  IntVector v;
  for (const Rational& x : q) {
    Rational scaled = x * Rational(lcm);
    v.push_back(scaled.get_num());
  }
  primitivize(v);
  return v;
}

std::vector<IntVector> vector_list_from_json(const json& j, int dim) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of vectors");
  std::vector<IntVector> out;
  for (const json& e : j) {
    IntVector v = int_vector_from_json(e);
    if (static_cast<int>(v.size()) != dim)
      throw Error(Errc::ParseError, "vector length differs from dim");
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

ToricInput toric_input_from_cone_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "cone JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw Error(Errc::ParseError, "cone JSON needs an integer \"dim\"");
  int dim = j["dim"].get<int>();
  if (dim < 1) throw Error(Errc::ParseError, "dim must be positive");

  if (j.contains("winding")) {
    std::string winding = j["winding"].get<std::string>();
    if (dim != 2) throw Error(Errc::InvalidInput, "winding applies to dim 2 only");
    if (!j.contains("generators"))
      throw Error(Errc::InvalidInput, "winding needs the two boundary rays as generators");
    std::vector<IntVector> rays = vector_list_from_json(j["generators"], 2);
    if (rays.size() != 2) throw Error(Errc::InvalidInput, "winding needs exactly two rays");
    AnglePair pair{rays[0], rays[1], winding == "full"};
    Integer cross = rays[0][0] * rays[1][1] - rays[0][1] * rays[1][0];
    Integer d = dot(rays[0], rays[1]);
    bool ok = false;
    if (winding == "convex") ok = cross > 0;
    else if (winding == "straight") ok = cross == 0 && d < 0;
    else if (winding == "reflex") ok = cross < 0;
    else if (winding == "full") ok = true;
    else throw Error(Errc::ParseError, "winding must be convex|straight|reflex|full");
    if (!ok) throw Error(Errc::InvalidInput, "rays do not realize the declared winding");
    return pair;
  }

  bool has_gens = j.contains("generators");
  bool has_normals = j.contains("facet_normals");
  if (!has_gens && !has_normals)
    throw Error(Errc::ParseError, "cone JSON needs generators and/or facet_normals");
  if (has_gens && has_normals)
    return cone_from_both(dim, vector_list_from_json(j["generators"], dim),
                          vector_list_from_json(j["facet_normals"], dim));
  if (has_gens) return cone_from_generators(dim, vector_list_from_json(j["generators"], dim));
  return cone_from_facet_normals(dim, vector_list_from_json(j["facet_normals"], dim));
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const Integer& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const QVector& v) {
  json a = json::array();
  for (const Rational& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const UnimodularWitness& w) {
  return json{{"matrix", to_json(w.matrix)}, {"inverse", to_json(w.inverse)}};
}

json to_json(const SlicePolytope& s) {
  json verts = json::array();
  for (const QVector& v : s.vertices) verts.push_back(to_json(v));
  return json{{"reeb", to_json(s.reeb)}, {"bounded", s.bounded}, {"vertices", std::move(verts)}};
}

json to_json(const StandardFormWitness& w) {
  json out = to_json(w.U);
  out["k"] = w.k;
  return out;
}

json to_json(const TripleReduction& r) {
  IntVector image(3);
  image[0] = r.g;
  return json{{"gcd", to_string(r.g)}, {"matrix", to_json(r.U.matrix)}, {"image", to_json(image)}};
}

json to_json(const ClassificationResult& r) {
  json out{{"manifold", r.manifold},
           {"reeb_type", r.reeb_type},
           {"verdict", verdict_name(r.verdict.tag)}};
  if (r.verdict.stein_note) out["stein_note"] = *r.verdict.stein_note;
  json w = json::object();
  if (r.witnesses.standard_form) w["standard_form"] = to_json(*r.witnesses.standard_form);
  if (r.witnesses.reeb) w["reeb"] = to_json(*r.witnesses.reeb);
  if (r.witnesses.slice) w["slice"] = to_json(*r.witnesses.slice);
  if (r.witnesses.triple_reduction) w["triple_reduction"] = to_json(*r.witnesses.triple_reduction);
  if (!w.empty()) out["witnesses"] = std::move(w);
  return out;
}

json to_json(const VerificationReport& r) {
  json out{{"checked", r.checked}, {"failures", r.failures}};
  if (r.min_margin) out["min_margin"] = to_string(*r.min_margin);
  if (!r.witnesses.empty()) {
    json w = json::array();
    size_t cap = std::min<size_t>(r.witnesses.size(), 10);
    for (size_t i = 0; i < cap; ++i) w.push_back(json{{"coords", to_json(r.witnesses[i].coords)}});
    out["witnesses"] = std::move(w);
    out["witnesses_shown"] = static_cast<long>(cap);
  }
  return out;
}

json to_json(const PolyForm& f) {
  json comps = json::object();
  for (const auto& [idx, poly] : f.comps) {
    std::string key;
    for (size_t i = 0; i < idx.size(); ++i)
      key += (i ? "," : "") + f.vars[static_cast<size_t>(idx[i])];
    comps[key] = poly.str();
  }
  return json{{"degree", f.degree}, {"components", std::move(comps)}};
}

json to_json(const Cone& c) {
  json out{{"dim", c.dim}};
  if (c.generators) {
    json g = json::array();
    for (const IntVector& v : *c.generators) g.push_back(to_json(v));
    out["generators"] = std::move(g);
  }
  if (c.facet_normals) {
    json n = json::array();
    for (const IntVector& v : *c.facet_normals) n.push_back(to_json(v));
    out["facet_normals"] = std::move(n);
  }
  return out;
}

} // namespace torcone
