#include <cmath>

#include "stiefel/cli.hpp"

namespace stiefel::cli {

using nlohmann::json;

namespace {

json doubles(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(stable_double(v));
  return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json to_json(const NormalizationChoice& choice) {
  json rows = json::array();
  for (auto r : choice.row_subset) rows.push_back(r + 1);
  json mixing = nullptr;
  if (choice.row_mixing) {
    mixing = json::array();
    for (std::size_t i = 0; i < choice.row_mixing->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < choice.row_mixing->cols(); ++j) row.push_back(to_string((*choice.row_mixing)(i, j)));
      mixing.push_back(std::move(row));
    }
  }
  return {{"distinguished_column", choice.distinguished_column + 1},
          {"row_subset", rows},
          {"minor", to_string(choice.minor)},
          {"certified", choice.certified},
          {"row_mixing", mixing}};
}

json to_json(const DetRouteResult& r) {
  return {{"lambda", r.lambda},       {"dim", r.dim},         {"sign_det_phi", r.sign_phi},
          {"sign_det_psi", r.sign_psi}, {"seed_used", r.seed_used}, {"attempts", r.attempts},
          {"implication_holds", r.implication_holds}};
}

json to_json(const SigRouteResult& r) {
  return {{"lambda", r.lambda},
          {"lambda_det_variant", r.lambda_det_variant},
          {"dim", r.dim},
          {"signature_theta_delta", r.signature_theta},
          {"signature_theta_omega_delta", r.signature_omega_theta},
          {"sign_det_theta_delta", r.sign_theta},
          {"sign_det_theta_omega_delta", r.sign_omega_theta}};
}

json to_json(const NumericRouteResult& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(cli::to_json(p));
  return {{"lambda", r.lambda},
          {"degree_sum", r.degree_sum},
          {"inside_count", r.inside_count},
          {"count_parity", optional_json(r.count_parity)},
          {"fallback", r.fallback},
          {"points", points}};
}

}  // namespace

double stable_double(double v) {
  double r = round_significant(v, 12);
  return r == 0.0 ? 0.0 : r;
}

json to_json(const SolutionPoint& p) {
  return {{"x", doubles(p.x)},
          {"lambda", doubles(p.lambda)},
          {"residual", stable_double(p.residual)},
          {"jacobian_sign", p.jacobian_sign},
          {"relative_det", stable_double(p.relative_det)},
          {"radius2", stable_double(p.radius2)},
          {"inside_ball", p.inside_ball},
          {"degenerate", p.degenerate},
          {"rank_deficient", p.rank_deficient},
          {"multiplicity", p.multiplicity},
          {"distinguished_column", p.distinguished_column + 1}};
}

json to_json(const LambdaReport& report) {
  json methods = json::array();
  for (Method m : report.methods_run) methods.push_back(to_string(m));
  json routes = json::object();
  if (report.det) routes["det"] = to_json(*report.det);
  if (report.sig) routes["sig"] = to_json(*report.sig);
  if (report.numeric) routes["numeric"] = to_json(*report.numeric);
  json failures = json::object();
  for (const auto& [m, msg] : report.failures) failures[to_string(m)] = msg;
  const auto& h = report.hypothesis_checks;
  json checks = {{"zero_dimensional", optional_json(h.zero_dimensional)},
                 {"normalization_certified", optional_json(h.normalization_certified)},
                 {"psi_nondegenerate", optional_json(h.psi_nondegenerate)},
                 {"sphere_disjoint", h.sphere_disjoint ? json(to_string(*h.sphere_disjoint)) : json(nullptr)},
                 {"all_zeros_nondegenerate", optional_json(h.all_zeros_nondegenerate)}};
  return {{"lambda", optional_json(report.lambda)},
          {"dim_A", optional_json(report.dim_A)},
          {"methods_run", methods},
          {"routes", routes},
          {"failures", failures},
          {"hypothesis_checks", checks},
          {"normalization", report.normalization ? to_json(*report.normalization) : json(nullptr)},
          {"seed", report.seed},
          {"agreement", report.agreement}};
}

json to_json(const CrosscapReport& report) {
  return {{"parity", optional_json(report.parity)},
          {"singular_points_inside", optional_json(report.singular_points_inside)},
          {"all_crosscaps", report.all_crosscaps ? json(to_string(*report.all_crosscaps)) : json(nullptr)},
          {"lambda_report", to_json(report.lambda)}};
}

}  // namespace stiefel::cli
