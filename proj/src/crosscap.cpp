#include "stiefel/crosscap.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace stiefel {

void SmoothMapSpec::validate() const {
  if (m < 2) throw InvalidSpec("map needs m >= 2");
  if (!variables || variables->size() != static_cast<std::size_t>(m)) throw InvalidSpec("map needs m variables");
  if (components.size() != static_cast<std::size_t>(2 * m - 1)) throw InvalidSpec("map needs 2m - 1 components");
  for (const auto& c : components)
    if (!same_ring(c.variables(), variables)) throw InvalidSpec("map component is not in the variable ring");
  if (r2 <= 0) throw InvalidSpec("squared radius must be positive");
  if (m % 2 != 0) throw UnsupportedDimension("cross-cap parity needs m even, so that (2m - 1) - m is odd");
}

SmoothMapSpec make_map_spec(int m, Variables vars, std::vector<Polynomial> components, Rational r2) {
  SmoothMapSpec f{m, std::move(vars), std::move(components), std::move(r2)};
  f.validate();
  return f;
}

FrameMapSpec jacobian_frame(const SmoothMapSpec& f) {
  f.validate();
  std::vector<std::vector<Polynomial>> columns;
  for (std::size_t i = 0; i < f.variables->size(); ++i) {
    std::vector<Polynomial> col;
    for (const auto& c : f.components) col.push_back(differentiate(c, i));
    columns.push_back(std::move(col));
  }
  return make_frame_spec(2 * f.m - 1, f.m, f.variables, columns, f.r2);
}

std::string to_string(CrosscapVerdict verdict) {
  switch (verdict) {
    case CrosscapVerdict::certified:
      return "certified";
    case CrosscapVerdict::refuted:
      return "refuted";
    case CrosscapVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// sigma_{m-1} / sigma_1 of df at x: the rank m - 1 margin.
double rank_margin(const FrameMapSpec& frame, std::span<const double> x) {
  auto values = frame.columns.evaluate(x);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(frame.columns.rows()), static_cast<Eigen::Index>(frame.columns.cols()));
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = values[static_cast<std::size_t>(r * a.cols() + c)];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s[0] == 0.0) return 0.0;
  return s[s.size() - 2] / s[0];
}

}  // namespace

CrosscapVerdict certify_crosscaps_only(const SmoothMapSpec& f, const EngineOptions& options, std::uint64_t seed) {
  try {
    FrameMapSpec frame = jacobian_frame(f);
    Ideal ideal = minors_ideal(frame);
    if (sphere_disjointness_check(frame, ideal, options, seed).status == SphereStatus::failed)
      return CrosscapVerdict::unknown;
    bool undecided = false;
    for (const auto& p : real_zeros(frame, options, seed)) {
      if (!p.inside_ball) continue;
      double margin = rank_margin(frame, p.x);
      if (p.relative_det < options.refute_tol || margin < options.refute_tol) return CrosscapVerdict::refuted;
      if (p.relative_det < options.degeneracy_tol || margin < options.rank_tol) undecided = true;
    }
    return undecided ? CrosscapVerdict::unknown : CrosscapVerdict::certified;
  } catch (const Error&) {
    return CrosscapVerdict::unknown;
  }
}

std::size_t count_singular_points(const SmoothMapSpec& f, const EngineOptions& options, std::uint64_t seed) {
  FrameMapSpec frame = jacobian_frame(f);
  Ideal ideal = minors_ideal(frame);
  GroebnerBasis gb = buchberger(ideal);
  if (!is_zero_dimensional(gb)) throw NotZeroDimensional("singular locus is not zero-dimensional");
  QuotientAlgebra algebra(gb);
  const double r = std::sqrt(f.r2.get_d());
  std::size_t count = 0;
  for (const auto& p : solve_real_points(algebra, ideal.generators(), options.solver, seed)) {
    double norm = 0;
    for (double v : p.x) norm += v * v;
    if (std::sqrt(norm) < r - options.boundary_tol * r) ++count;
  }
  return count;
}

CrosscapReport crosscap_parity(const SmoothMapSpec& f, const std::set<Method>& methods, std::uint64_t seed,
                               const std::optional<Polynomial>& delta, const EngineOptions& options, bool certify) {
  FrameMapSpec frame = jacobian_frame(f);
  CrosscapReport report;
  report.lambda = compute_lambda(frame, methods, seed, delta, options);
  report.parity = report.lambda.lambda;
  if (report.lambda.numeric) {
    report.singular_points_inside = report.lambda.numeric->inside_count;
  } else {
    try {
      report.singular_points_inside = count_singular_points(f, options, seed);
    } catch (const Error&) {
    }
  }
  if (certify) report.all_crosscaps = certify_crosscaps_only(f, options, seed);
  return report;
}

}  // namespace stiefel
