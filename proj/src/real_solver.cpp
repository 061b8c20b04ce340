#include "stiefel/real_solver.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

double norm(std::span<const double> x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Eigen::VectorXd residual_vector(std::span<const Polynomial> system, std::span<const double> x) {
  Eigen::VectorXd r(static_cast<Eigen::Index>(system.size()));
  for (std::size_t i = 0; i < system.size(); ++i) r[static_cast<Eigen::Index>(i)] = evaluate(system[i], x);
  return r;
}

Eigen::MatrixXd to_dense(const RationalMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).get_d();
  return out;
}

bool lexicographic_less(const RealPoint& a, const RealPoint& b) {
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    double ra = round_significant(a.x[i]), rb = round_significant(b.x[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  double magnitude = std::ceil(std::log10(std::fabs(value)));
  double factor = std::pow(10.0, digits - static_cast<int>(magnitude));
  double rounded = std::round(value * factor) / factor;
  return rounded == 0.0 ? 0.0 : rounded;
}

double relative_residual(std::span<const Polynomial> system, std::span<const double> x) {
  double worst = 0.0;
  for (const auto& g : system) worst = std::max(worst, std::fabs(evaluate(g, x)) / (1.0 + evaluation_scale(g, x)));
  return worst;
}

double newton_polish(std::span<const Polynomial> system, std::vector<double>& x, const SolverOptions& options) {
  if (system.empty()) return 0.0;
  const std::size_t n = x.size();
  std::vector<std::vector<Polynomial>> jac(system.size());
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) jac[i].push_back(differentiate(system[i], v));

  double rel = relative_residual(system, x);
  for (int it = 0; it < options.newton_iterations && rel > options.newton_target; ++it) {
    Eigen::VectorXd r = residual_vector(system, x);
    Eigen::MatrixXd j(static_cast<Eigen::Index>(system.size()), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < system.size(); ++i)
      for (std::size_t v = 0; v < n; ++v)
        j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) = evaluate(jac[i][v], x);
    Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(-r);
    if (!step.allFinite()) break;

    // Backtrack until the residual norm decreases.
    const double base = r.norm();
    bool improved = false;
    for (double t = 1.0; t > 1.0 / 1024; t /= 2) {
      std::vector<double> trial(x);
      for (std::size_t v = 0; v < n; ++v) trial[v] += t * step[static_cast<Eigen::Index>(v)];
      if (residual_vector(system, trial).norm() < base) {
        x = std::move(trial);
        improved = true;
        break;
      }
    }
    if (!improved) break;
    rel = relative_residual(system, x);
  }
  return rel;
}

std::vector<RealPoint> solve_real_points(const QuotientAlgebra& algebra, std::span<const Polynomial> generators,
                                         const SolverOptions& options, std::uint64_t seed) {
  const std::size_t d = algebra.dim();
  const std::size_t nvars = algebra.variables()->size();
  if (d == 0) return {};

  std::vector<Eigen::MatrixXd> var_t;
  for (std::size_t v = 0; v < nvars; ++v) var_t.push_back(to_dense(algebra.variable_matrix(v)).transpose());

  std::mt19937_64 rng(seed ^ 0x5eed5eed5eed5eedULL);
  std::uniform_real_distribution<double> coefficient(-1.0, 1.0);

  std::vector<std::vector<std::complex<double>>> candidates;
  bool decomposed = false;
  for (int draw = 0; draw < options.eigen_draws && !decomposed; ++draw) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t v = 0; v < nvars; ++v) combo += coefficient(rng) * var_t[v];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(combo, true);
    if (solver.info() != Eigen::Success) continue;
    decomposed = true;

    Eigen::MatrixXcd vecs = solver.eigenvectors();
    for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
      Eigen::VectorXcd u = vecs.col(k);
      std::complex<double> uu = u.dot(u);  // conjugates the left operand
      std::vector<std::complex<double>> point(nvars);
      for (std::size_t v = 0; v < nvars; ++v) point[v] = u.dot(var_t[v].cast<std::complex<double>>() * u) / uu;
      candidates.push_back(std::move(point));
    }
  }
  if (!decomposed) throw EigenFailure("eigen-decomposition failed for every random combination");

  std::vector<RealPoint> accepted;
  for (const auto& cand : candidates) {
    double mag = 0.0, imag = 0.0;
    std::vector<double> x(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      x[v] = cand[v].real();
      mag = std::max(mag, std::abs(cand[v]));
      imag = std::max(imag, std::fabs(cand[v].imag()));
    }
    const double scale = std::max(1.0, mag);
    if (imag > options.imag_candidate * scale) continue;

    std::vector<double> polished = x;
    double res = newton_polish(generators, polished, options);
    if (!(res <= options.residual_tol)) continue;
    // A loosely-real candidate must not wander off to an unrelated root.
    if (imag > options.imag_cutoff * scale) {
      std::vector<double> delta(nvars);
      for (std::size_t v = 0; v < nvars; ++v) delta[v] = polished[v] - x[v];
      if (norm(delta) > std::sqrt(options.imag_candidate) * scale) continue;
    }
    accepted.push_back({std::move(polished), res, 1});
  }

  // Merge points within the cluster radius; keep the better residual.
  std::vector<RealPoint> unique;
  for (auto& p : accepted) {
    bool merged = false;
    for (auto& q : unique) {
      std::vector<double> delta(nvars);
      for (std::size_t v = 0; v < nvars; ++v) delta[v] = p.x[v] - q.x[v];
      if (norm(delta) <= options.cluster_radius * std::max(1.0, norm(q.x))) {
        q.multiplicity += p.multiplicity;
        if (p.residual < q.residual) {
          q.x = p.x;
          q.residual = p.residual;
        }
        merged = true;
        break;
      }
    }
    if (!merged) unique.push_back(std::move(p));
  }
  std::sort(unique.begin(), unique.end(), lexicographic_less);
  return unique;
}

std::vector<RealPoint> solve_real_points(const Ideal& ideal, const SolverOptions& options, std::uint64_t seed) {
  QuotientAlgebra algebra(buchberger(ideal));
  return solve_real_points(algebra, ideal.generators(), options, seed);
}

}  // namespace stiefel
