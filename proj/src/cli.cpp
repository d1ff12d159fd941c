#include "torcone/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>

#include "torcone/error.hpp"
#include "torcone/json_io.hpp"

namespace torcone {

namespace {

int dim_cap_from_env() {
  const char* env = std::getenv("TORCONE_DIM_CAP");
  if (!env || !*env) return kDefaultDimCap;
  char* end = nullptr;
  long cap = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || cap < 1)
    throw Error(Errc::InvalidInput, "TORCONE_DIM_CAP must be a positive integer");
  return static_cast<int>(cap);
}

int exit_code_for(const Error& e) {
  switch (e.code) {
    case Errc::DimensionCapExceeded:
    case Errc::UnclassifiableCone:
    case Errc::NotUnimodular:
      return 3; // unsupported
    case Errc::NoPositiveT:
      return 1; // a verification that found no witness
    default:
      return 2; // invalid input
  }
}

ToricInput parse_cone_argument(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad cone JSON: ") + e.what());
  }
  return toric_input_from_cone_json(j);
}

Cone cone_only(const ToricInput& input, const char* what) {
  if (const Cone* c = std::get_if<Cone>(&input)) return *c;
  throw Error(Errc::InvalidInput, std::string(what) + " needs a plain cone, not an angle pair");
}

IntVector parse_int_csv(const std::string& text) {
  IntVector out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw Error(Errc::ParseError, "empty entry in integer list");
    Rational q = parse_rational(tok);
    if (q.get_den() != 1) throw Error(Errc::ParseError, "expected integers in list");
    out.push_back(q.get_num());
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<Rational> parse_tau_grid(const std::string& text) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw Error(Errc::ParseError, "empty entry in tau grid");
    out.push_back(parse_rational(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

IntVector triple_from_strings(const std::vector<std::string>& toks) {
  IntVector v;
  for (const std::string& t : toks) {
    Rational q = parse_rational(t);
    if (q.get_den() != 1) throw Error(Errc::ParseError, "triple entries must be integers");
    v.push_back(q.get_num());
  }
  return v;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact classification and verification for toric contact manifolds"};
  app.name("torcone");
  app.require_subcommand(1);

  // classify
  std::string classify_cone;
  std::vector<std::string> classify_triple;
  long classify_torus3 = 0;
  int classify_trivial = 0;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "classify a toric contact manifold from moment data");
  CLI::Option* opt_cone = cmd_classify->add_option("--cone", classify_cone, "cone JSON");
  CLI::Option* opt_triple = cmd_classify->add_option("--triple", classify_triple,
                                                     "bundle triple k1 k2 k3")
                                ->expected(3);
  CLI::Option* opt_torus3 =
      cmd_classify->add_option("--torus3", classify_torus3, "T^3 fiber-component count k");
  CLI::Option* opt_trivial = cmd_classify->add_option(
      "--free-trivial", classify_trivial, "trivial free bundle in torus rank d >= 4");

  // reduce-triple
  std::vector<std::string> reduce_args;
  CLI::App* cmd_reduce =
      app.add_subcommand("reduce-triple", "unimodular reduction of a triple to (g, 0, 0)");
  cmd_reduce->add_option("triple", reduce_args, "k1 k2 k3")->expected(3);

  // normalize / reeb / slice
  std::string cone_arg;
  std::string slice_reeb;
  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "SL(d,Z) map onto the standard cone {x_1..x_{d-k} >= 0}");
  cmd_normalize->add_option("--cone", cone_arg, "cone JSON")->required();
  CLI::App* cmd_reeb = app.add_subcommand("reeb", "sum of inward facet normals");
  cmd_reeb->add_option("--cone", cone_arg, "cone JSON")->required();
  CLI::App* cmd_slice = app.add_subcommand("slice", "cross-section polytope at pairing 1");
  cmd_slice->add_option("--cone", cone_arg, "cone JSON")->required();
  cmd_slice->add_option("--reeb", slice_reeb, "slice vector, comma-separated integers");

  // verify family
  CLI::App* cmd_verify = app.add_subcommand("verify", "exact verification of the explicit forms");
  cmd_verify->require_subcommand(1);
  std::string form = "beta";
  int vd = 3, vk = 2, samples = 500;
  uint64_t seed = 7;
  std::string tau_text = "0,1,10,100";
  bool serial = false;

  CLI::App* v_contact = cmd_verify->add_subcommand("contact", "positivity of alpha ^ d(alpha)^{d-1}");
  v_contact->add_option("--form", form, "beta | alpha | dtheta1");
  v_contact->add_option("--d", vd, "torus rank");
  v_contact->add_option("--k", vk, "angle-coordinate count");
  v_contact->add_option("--samples", samples, "sample count");
  v_contact->add_option("--seed", seed, "sampling seed");
  v_contact->add_flag("--serial", serial, "use the serial reference loop");

  CLI::App* v_strong = cmd_verify->add_subcommand("strongfill", "disk-bundle filling identities");
  v_strong->add_option("--d", vd, "torus rank")->required();
  v_strong->add_option("--k", vk, "angle-coordinate count")->required();

  CLI::App* v_weak = cmd_verify->add_subcommand("weakfill", "weak-filling positivity on T^2 x S^3");
  v_weak->add_option("--samples", samples, "sample count");
  v_weak->add_option("--tau", tau_text, "comma-separated nonnegative rationals");
  v_weak->add_option("--seed", seed, "sampling seed");
  v_weak->add_flag("--serial", serial, "use the serial reference loop");

  CLI::App* v_moment = cmd_verify->add_subcommand("moment", "moment-map image checks");
  v_moment->add_option("--form", form, "beta | cosphere");
  v_moment->add_option("--d", vd, "torus rank");
  v_moment->add_option("--k", vk, "angle-coordinate count (beta)");
  v_moment->add_option("--samples", samples, "sample count");
  v_moment->add_option("--seed", seed, "sampling seed");
  v_moment->add_flag("--serial", serial, "use the serial reference loop");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    int cap = dim_cap_from_env();
    ExecMode mode = serial ? ExecMode::Serial : ExecMode::Parallel;

    if (cmd_classify->parsed()) {
      int given = (opt_cone->count() ? 1 : 0) + (opt_triple->count() ? 1 : 0) +
                  (opt_torus3->count() ? 1 : 0) + (opt_trivial->count() ? 1 : 0);
      if (given != 1)
        throw Error(Errc::InvalidInput,
                    "give exactly one of --cone, --triple, --torus3, --free-trivial");
      ToricInput input;
      if (opt_cone->count()) input = parse_cone_argument(classify_cone);
      else if (opt_triple->count()) input = FreeTriple{triple_from_strings(classify_triple)};
      else if (opt_torus3->count()) input = FreeTorus3{classify_torus3};
      else input = FreeTrivial{classify_trivial};
      emit(out, to_json(classify(input, cap)));
      return 0;
    }
    if (cmd_reduce->parsed()) {
      IntVector v = triple_from_strings(reduce_args);
      GcdReduction r = gcd_reduce(v);
      json j = to_json(TripleReduction{r.g, r.U});
      emit(out, j);
      return 0;
    }
    if (cmd_normalize->parsed()) {
      Cone c = cone_only(parse_cone_argument(cone_arg), "normalize");
      emit(out, to_json(normalize_to_standard(c, cap)));
      return 0;
    }
    if (cmd_reeb->parsed()) {
      Cone c = cone_only(parse_cone_argument(cone_arg), "reeb");
      emit(out, json{{"reeb", to_json(reeb_vector(c, cap))}});
      return 0;
    }
    if (cmd_slice->parsed()) {
      Cone c = cone_only(parse_cone_argument(cone_arg), "slice");
      IntVector R = slice_reeb.empty() ? reeb_vector(c, cap) : parse_int_csv(slice_reeb);
      emit(out, to_json(slice(c, R, cap)));
      return 0;
    }
    if (v_contact->parsed()) {
      VerificationReport r;
      if (form == "alpha") {
        ManifoldChart chart = ManifoldChart::t2s3();
        r = verify_contact_condition(chart, alpha_eq_form(chart), samples, seed, mode);
      } else if (form == "beta" || form == "dtheta1") {
        ManifoldChart chart = ManifoldChart::tk_sphere(vd, vk);
        PolyForm f = (form == "beta") ? beta_form(chart) : theta_form(chart, 0);
        r = verify_contact_condition(chart, f, samples, seed, mode);
      } else {
        throw Error(Errc::InvalidInput, "contact --form must be beta, alpha or dtheta1");
      }
      emit(out, to_json(r));
      return r.failures > 0 ? 1 : 0;
    }
    if (v_strong->parsed()) {
      StrongFillingReport r = verify_strong_filling(vd, vk);
      json j = to_json(r.report);
      j["cartan_identity"] = r.cartan_identity;
      j["boundary_identity"] = r.boundary_identity;
      if (!r.cartan_identity) j["cartan_diff"] = to_json(r.cartan_diff);
      if (!r.boundary_identity) j["boundary_diff"] = to_json(r.boundary_diff);
      emit(out, j);
      return r.report.failures > 0 ? 1 : 0;
    }
    if (v_weak->parsed()) {
      WeakFillResult r = verify_weak_fill(samples, parse_tau_grid(tau_text), seed, mode);
      json j = to_json(r.report);
      j["t_star"] = to_string(r.t_star);
      emit(out, j);
      return r.report.failures > 0 ? 1 : 0;
    }
    if (v_moment->parsed()) {
      VerificationReport r;
      if (form == "beta") r = verify_moment_containment(vd, vk, samples, seed, mode);
      else if (form == "cosphere") r = verify_moment_cosphere(vd, samples, seed, mode);
      else throw Error(Errc::InvalidInput, "moment --form must be beta or cosphere");
      emit(out, to_json(r));
      return r.failures > 0 ? 1 : 0;
    }
    throw Error(Errc::InvalidInput, "no subcommand");
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace torcone
