#include <cstdlib>
#include <functional>
#include <ostream>

#include "stiefel/cli.hpp"
#include "stiefel/parser.hpp"

namespace stiefel::cli {

using nlohmann::json;

namespace {

std::string value_text(const json& v) {
  if (v.is_null()) return "undefined";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_lambda_text(const json& r, std::ostream& out) {
  out << "Lambda: " << value_text(r["lambda"]) << "\n";
  out << "dim A: " << value_text(r["dim_A"]) << "\n";
  for (const auto& [name, route] : r["routes"].items()) {
    out << "route " << name << ": lambda " << value_text(route["lambda"]);
    if (name == "det")
      out << " (sgn det Phi " << route["sign_det_phi"] << ", sgn det Psi " << route["sign_det_psi"] << ", attempts "
          << route["attempts"] << ")";
    if (name == "sig")
      out << " (signatures " << route["signature_theta_delta"] << ", " << route["signature_theta_omega_delta"]
          << "; det variant " << route["lambda_det_variant"] << ")";
    if (name == "numeric")
      out << " (degree sum " << route["degree_sum"] << " over " << route["inside_count"] << " inside zeros)";
    out << "\n";
  }
  for (const auto& [name, msg] : r["failures"].items()) out << "route " << name << " failed: " << value_text(msg) << "\n";
  for (const auto& [name, v] : r["hypothesis_checks"].items()) out << "check " << name << ": " << value_text(v) << "\n";
}

void render_text(const json& doc, std::ostream& out) {
  const std::string cmd = doc["command"];
  out << cmd << " instance " << doc["instance"]["hash"].get<std::string>() << " r2 "
      << doc["instance"]["r2"].get<std::string>() << " seed " << doc["seed"] << "\n";
  if (doc.contains("error"))
    out << "error (" << doc["error"]["kind"].get<std::string>() << "): " << doc["error"]["message"].get<std::string>()
        << "\n";
  if (!doc.contains("result")) return;
  const json& r = doc["result"];
  if (cmd == "lambda") {
    render_lambda_text(r, out);
  } else if (cmd == "crosscaps") {
    out << "cross-cap parity: " << value_text(r["parity"]) << "\n";
    out << "singular points inside: " << value_text(r["singular_points_inside"]) << "\n";
    out << "all cross-caps: " << value_text(r["all_crosscaps"]) << "\n";
    render_lambda_text(r["lambda_report"], out);
  } else if (cmd == "solve") {
    out << "dim A: " << r["dim_A"] << "\n";
    out << "real points: " << r["points"].size() << "\n";
    for (const auto& p : r["points"])
      out << "  " << p["x"].dump() << "  |x|^2 " << p["radius2"] << "  residual " << p["residual"]
          << (p["inside_ball"].get<bool>() ? "  inside" : "  outside") << "\n";
  } else if (cmd == "algebra") {
    out << "dim A: " << r["dim_A"] << "\n";
    out << "basis:";
    for (const auto& b : r["basis"]) out << " " << b.get<std::string>();
    out << "\ngroebner basis:\n";
    for (const auto& g : r["groebner_basis"]) out << "  " << g.get<std::string>() << "\n";
  }
}

Rational parse_cli_rational(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("bad ") + what + ": " + e.what());
  }
}

using Body = std::function<json(const Instance&)>;

// Loads the instance, runs the body, and maps library errors onto exit codes.
int execute(const std::string& command, const std::string& path, const CommandOptions& opts, std::ostream& out,
            std::ostream& err, const Body& body) {
  json doc = {{"schema_version", kSchemaVersion}, {"command", command}, {"seed", opts.seed}};
  int code = kOk;
  auto fail = [&](int c, const char* kind, const std::string& msg) {
    code = c;
    doc["error"] = {{"kind", kind}, {"message", msg}};
    err << "error: " << msg << "\n";
  };

  Instance inst;
  try {
    inst = load_instance(path);
    if (opts.r2) {
      inst.r2 = parse_cli_rational(*opts.r2, "--r2");
      if (inst.r2 <= 0) throw InputError("--r2 must be positive");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  doc["instance"] = {{"hash", inst.hash},
                     {"kind", inst.kind == InstanceKind::frame ? "frame" : "map"},
                     {"r2", to_string(inst.r2)}};

  try {
    doc["result"] = body(inst);
  } catch (const RouteDisagreement& e) {
    doc["result"] = to_json(e.report());
    fail(kRouteDisagreement, "RouteDisagreement", e.what());
  } catch (const AllRoutesFailed& e) {
    doc["result"] = to_json(e.report());
    fail(kHypothesisFailure, "AllRoutesFailed", e.what());
  } catch (const UnsupportedDimension& e) {
    fail(kUnsupportedDimension, "UnsupportedDimension", e.what());
  } catch (const InputError& e) {
    fail(kInputError, "InputError", e.what());
  } catch (const InvalidSpec& e) {
    fail(kInputError, "InvalidSpec", e.what());
  } catch (const ParseError& e) {
    fail(kInputError, "ParseError", e.what());
  } catch (const VariableMismatch& e) {
    fail(kInputError, "VariableMismatch", e.what());
  } catch (const NotZeroDimensional& e) {
    fail(kHypothesisFailure, "NotZeroDimensional", e.what());
  } catch (const HypothesisFailed& e) {
    fail(kHypothesisFailure, "HypothesisFailed", e.what());
  } catch (const Error& e) {
    fail(kHypothesisFailure, "Error", e.what());
  }

  if (opts.format == Format::json)
    out << doc.dump(2) << "\n";
  else
    render_text(doc, out);
  return code;
}

std::set<Method> method_set(const CommandOptions& opts) {
  if (opts.method == "all") {
    std::set<Method> all = {Method::det, Method::numeric};
    if (opts.delta) all.insert(Method::sig);
    return all;
  }
  try {
    Method m = parse_method(opts.method);
    if (m == Method::sig && !opts.delta) throw InputError("--method sig needs --delta");
    return {m};
  } catch (const InvalidSpec&) {
    throw InputError("--method must be det, sig, numeric or all");
  }
}

std::optional<Polynomial> delta_of(const CommandOptions& opts, const Instance& inst) {
  if (!opts.delta) return std::nullopt;
  try {
    return parse_polynomial(*opts.delta, inst.variables);
  } catch (const ParseError& e) {
    throw InputError(std::string("bad --delta: ") + e.what());
  }
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("LAMBDA_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  return (end && *end == '\0') ? v : 0;
}

int run_lambda(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return execute("lambda", path, opts, out, err, [&](const Instance& inst) {
    auto methods = method_set(opts);
    auto delta = delta_of(opts, inst);
    FrameMapSpec spec = frame_spec(inst);
    return to_json(compute_lambda(spec, methods, opts.seed, delta, opts.engine));
  });
}

int run_crosscaps(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return execute("crosscaps", path, opts, out, err, [&](const Instance& inst) {
    auto methods = method_set(opts);
    auto delta = delta_of(opts, inst);
    SmoothMapSpec f = map_spec(inst);
    return to_json(crosscap_parity(f, methods, opts.seed, delta, opts.engine, opts.certify));
  });
}

int run_solve(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return execute("solve", path, opts, out, err, [&](const Instance& inst) {
    Ideal ideal(inst.variables, all_maximal_minors(degeneracy_matrix(inst)));
    GroebnerBasis gb = buchberger(ideal);
    if (!is_zero_dimensional(gb)) throw NotZeroDimensional("the minors ideal is not zero-dimensional");
    QuotientAlgebra algebra(gb);
    const double r2 = inst.r2.get_d();
    const double r = std::sqrt(r2);
    json points = json::array();
    for (const auto& p : solve_real_points(algebra, ideal.generators(), opts.engine.solver, opts.seed)) {
      double norm2 = 0;
      for (double v : p.x) norm2 += v * v;
      json x = json::array();
      for (double v : p.x) x.push_back(stable_double(v));
      points.push_back({{"x", x},
                        {"residual", stable_double(p.residual)},
                        {"multiplicity", p.multiplicity},
                        {"radius2", stable_double(norm2)},
                        {"inside_ball", std::sqrt(norm2) < r - opts.engine.boundary_tol * r}});
    }
    return json{{"dim_A", algebra.dim()}, {"points", points}};
  });
}

int run_algebra(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return execute("algebra", path, opts, out, err, [&](const Instance& inst) {
    Ideal ideal(inst.variables, all_maximal_minors(degeneracy_matrix(inst)));
    GroebnerBasis gb = buchberger(ideal);
    if (!is_zero_dimensional(gb)) throw NotZeroDimensional("the minors ideal is not zero-dimensional");
    QuotientAlgebra algebra(gb);
    json basis = json::array();
    for (const auto& m : algebra.basis()) basis.push_back(to_string(Polynomial::term(inst.variables, m, 1)));
    json elements = json::array();
    for (const auto& g : gb.elements()) elements.push_back(to_string(g));
    return json{{"dim_A", algebra.dim()}, {"basis", basis}, {"groebner_basis", elements}};
  });
}

}  // namespace stiefel::cli
