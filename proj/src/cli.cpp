#include "framekit/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "framekit/dilation.hpp"
#include "framekit/error.hpp"
#include "framekit/generate.hpp"
#include "framekit/hilbert.hpp"
#include "framekit/io.hpp"
#include "framekit/random.hpp"
#include "framekit/riesz.hpp"

namespace framekit::cli {

namespace {

using io::Json;

struct CommonOptions {
  double cond_limit = kDefaultCondLimit;
  double tolerance = std::nan("");
  std::string out;
};

double parse_exponent_flag(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInfinity;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidExponent("cannot parse exponent '" + s + "'");
  }
  if (used != s.size()) throw InvalidExponent("cannot parse exponent '" + s + "'");
  require_exponent(v);
  return v;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = io::dump(j);
  if (out_path.empty()) {
    out << text;
  } else {
    io::write_text_file(out_path, text);
  }
}

Json verdict_to_json(const RieszVerdict& v) {
  return Json{{"is_riesz", v.is_riesz},
              {"route_definitional", v.route_definitional},
              {"route_characterization", v.route_characterization},
              {"identity_defect", std::isinf(v.identity_defect) ? Json("inf") : Json(v.identity_defect)}};
}

Json classification_to_json(const PasfClassification& c) {
  return Json{{"kind", std::string(to_string(c.kind))},
              {"condition_of_S", std::isinf(c.condition_of_S) ? Json("inf") : Json(c.condition_of_S)},
              {"identity_defect_of_S", c.identity_defect_of_S}};
}

// Checks on a pair that classify() accepted.
VerificationReport pair_checks(const FramePair& pair, double tol, double cond_limit) {
  const std::size_t d = pair.space_dim();
  VerificationReport r;
  std::vector<Vector> probes;
  for (std::size_t j = 0; j < d; ++j) probes.push_back(unit_vector(d, j));
  Rng rng(2024);
  for (int k = 0; k < 5; ++k) probes.push_back(rng.vector(d));

  double rec_f = 0.0;
  double rec_v = 0.0;
  for (const auto& x : probes) {
    const double scale = std::max(1.0, vector_p_norm(x, pair.q()));
    const Vector a = reconstruct(pair, x, ExpansionMode::DualFunctionals, cond_limit);
    const Vector b = reconstruct(pair, x, ExpansionMode::DualVectors, cond_limit);
    rec_f = std::max(rec_f, vector_p_norm(axpy(-1.0, x, a), pair.q()) / scale);
    rec_v = std::max(rec_v, vector_p_norm(axpy(-1.0, x, b), pair.q()) / scale);
  }
  r.add("reconstruct_dual_functionals", rec_f, tol);
  r.add("reconstruct_dual_vectors", rec_v, tol);

  const Matrix p = pasf_projection(pair, cond_limit);
  r.add("projection_idempotent", defect(p * p, p), tol);
  r.add("projection_rank", std::abs(static_cast<double>(numerical_rank(p)) - static_cast<double>(d)), 0.0);
  r.add("projection_range", defect(p * pair.functionals(), pair.functionals()), tol);
  r.add_flag("analysis_injective", numerical_rank(pair.functionals()) == d);
  r.add_flag("synthesis_surjective", numerical_rank(pair.vectors()) == d);
  return r;
}

int verify_pair(const FramePair& pair, const CommonOptions& opt, std::ostream& out) {
  const double tol = resolve_tolerance(opt.tolerance);
  const PasfClassification cls = classify(pair, opt.cond_limit, tol);
  Json result{{"input", "frame_pair"}, {"classification", classification_to_json(cls)}};
  VerificationReport report;
  report.add_flag("p_asf", cls.kind != PasfKind::NotPasf);
  if (cls.kind == PasfKind::NotPasf) {
    result["report"] = io::report_to_json(report);
    out << io::dump(result);
    return kExitMath;
  }
  report.merge(pair_checks(pair, tol, opt.cond_limit));
  result["p_approximate_riesz"] = verdict_to_json(is_p_approximate_riesz(pair, opt.cond_limit, tol));
  if (pair.is_hilbert_style()) {
    const RieszVerdict hv = is_riesz_basis_hilbert(pair, opt.cond_limit, tol);
    result["riesz_hilbert"] = verdict_to_json(hv);
    report.add_flag("riesz_routes_agree", hv.route_definitional == hv.route_characterization);
  }
  result["report"] = io::report_to_json(report);
  out << io::dump(result);
  return report.overall() ? kExitOk : kExitMath;
}

int verify_bundle(const DilationBundle& bundle, const CommonOptions& opt, std::ostream& out) {
  const double tol = resolve_tolerance(opt.tolerance);
  VerificationReport report = verify_dilation(bundle, tol, opt.cond_limit);
  Json result{{"input", "dilation_bundle"}};
  try {
    const FramePair dilated = dilated_pair(bundle, opt.cond_limit);
    const PasfClassification cls = classify(dilated, opt.cond_limit, tol);
    result["dilated_classification"] = classification_to_json(cls);
    report.add_flag("dilated_p_asf", cls.kind != PasfKind::NotPasf);
    if (cls.kind != PasfKind::NotPasf) {
      const RieszVerdict v = is_p_approximate_riesz(dilated, opt.cond_limit, tol);
      result["dilated_p_approximate_riesz"] = verdict_to_json(v);
      report.add("dilated_riesz_identity", v.identity_defect, tol);
    }
  } catch (const NotInvertible&) {
    report.add_flag("dilated_p_asf", false);
  }
  result["report"] = io::report_to_json(report);
  out << io::dump(result);
  return report.overall() ? kExitOk : kExitMath;
}

int cmd_gen(const GenSpec& spec, const CommonOptions& opt, std::ostream& out) {
  emit(io::pair_to_json(generate(spec)), opt.out, out);
  return kExitOk;
}

int cmd_verify(const std::string& input, const CommonOptions& opt, std::ostream& out) {
  const Json j = io::read_json_file(input);
  if (j.is_object() && j.contains("base")) return verify_bundle(io::bundle_from_json(j), opt, out);
  return verify_pair(io::pair_from_json(j), opt, out);
}

int cmd_dilate(const std::string& input, const CommonOptions& opt, std::ostream& out) {
  const FramePair pair = io::pair_from_json(io::read_json_file(input));
  const double tol = resolve_tolerance(opt.tolerance);
  Json result{{"input", "frame_pair"}};
  VerificationReport report;
  std::optional<DilationBundle> bundle;
  if (pair.is_hilbert_style()) {
    NaimarkDilation nd = naimark_dilate(HilbertFrame{pair.vectors()}, tol, opt.cond_limit);
    result["hilbert"] = Json{{"frame_bounds", {nd.base_bounds.a, nd.base_bounds.b}},
                             {"omega_frame_bounds", {nd.omega_bounds.a, nd.omega_bounds.b}},
                             {"omega_spectrum", nd.omega_spectrum}};
    report = std::move(nd.report);
    bundle = std::move(nd.bundle);
  } else {
    bundle = dilate(pair, opt.cond_limit);
    report = verify_dilation(*bundle, tol, opt.cond_limit);
  }
  result["dilated_dim"] = bundle->dilated_dim();
  result["complement_dim"] = bundle->complement_dim();
  result["degenerate"] = bundle->degenerate();
  result["report"] = io::report_to_json(report);
  if (!opt.out.empty()) io::write_text_file(opt.out, io::dump(io::bundle_to_json(*bundle)));
  out << io::dump(result);
  return report.overall() ? kExitOk : kExitMath;
}

int cmd_dual(const std::string& input, const CommonOptions& opt, std::ostream& out) {
  const FramePair pair = io::pair_from_json(io::read_json_file(input));
  emit(io::pair_to_json(canonical_dual(pair, opt.cond_limit)), opt.out, out);
  return kExitOk;
}

}  // namespace

double resolve_tolerance(double flag_value) {
  if (!std::isnan(flag_value)) return flag_value;
  if (const char* env = std::getenv("FRAMEKIT_TOLERANCE"); env != nullptr && *env != '\0') {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("FRAMEKIT_TOLERANCE is not a number: ") + env);
    }
  }
  return kDefaultTolerance;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"framekit: p-approximate Schauder frames, Riesz bases and their dilations"};
  app.require_subcommand(1);

  CommonOptions opt;
  GenSpec spec;
  std::string p_text = "2";
  std::string q_text;
  std::string kind_text = "RANDOM_PASF";
  std::string input;

  auto add_common = [&](CLI::App* sub, bool with_out, bool with_tolerance) {
    sub->add_option("--cond-limit", opt.cond_limit, "Largest accepted condition number of S")
        ->capture_default_str()
        ->check(CLI::Range(1.0, kInfinity));
    if (with_tolerance) {
      sub->add_option("--tolerance", opt.tolerance,
                      "Defect threshold (default 1e-8, or FRAMEKIT_TOLERANCE)");
    }
    if (with_out) sub->add_option("--out", opt.out, "Output file (default: standard output)");
  };

  auto* gen = app.add_subcommand("gen", "Generate a seeded frame pair");
  gen->add_option("-d,--dim", spec.d, "Dimension of X")->capture_default_str();
  gen->add_option("-n,--seq-dim", spec.n, "Length of the sequence")->capture_default_str();
  gen->add_option("--p", p_text, "Sequence-space exponent (number or inf)")->capture_default_str();
  gen->add_option("--q", q_text, "Norm exponent on X (default: p)");
  gen->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  gen->add_option("--kind", kind_text, "RANDOM_PASF, HILBERT_FRAME, RIESZ or TIGHT")->capture_default_str();
  gen->add_option("--cond-target", spec.condition_target, "Largest accepted cond(S)")->capture_default_str();
  gen->add_flag("--mercedes", spec.mercedes, "TIGHT, d = 2, n = 3: the Mercedes-Benz frame");
  add_common(gen, true, false);

  auto* verify = app.add_subcommand("verify", "Classify a pair (or check a bundle) and report defects");
  verify->add_option("input", input, "FramePair or DilationBundle JSON file")->required();
  add_common(verify, false, true);

  auto* dil = app.add_subcommand("dilate", "Dilate a p-ASF to a p-approximate Riesz basis");
  dil->add_option("input", input, "FramePair JSON file")->required();
  add_common(dil, true, true);

  auto* dual = app.add_subcommand("dual", "Write the canonical dual pair");
  dual->add_option("input", input, "FramePair JSON file")->required();
  add_common(dual, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (gen->parsed()) {
      spec.p = parse_exponent_flag(p_text);
      spec.q = q_text.empty() ? spec.p : parse_exponent_flag(q_text);
      const auto kind = parse_gen_kind(kind_text);
      if (!kind) throw InvalidArgument("unknown --kind '" + kind_text + "'");
      spec.kind = *kind;
      return cmd_gen(spec, opt, out);
    }
    if (verify->parsed()) return cmd_verify(input, opt, out);
    if (dil->parsed()) return cmd_dilate(input, opt, out);
    if (dual->parsed()) return cmd_dual(input, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}

}  // namespace framekit::cli
