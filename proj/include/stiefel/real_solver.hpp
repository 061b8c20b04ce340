#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stiefel/groebner.hpp"
#include "stiefel/quotient_algebra.hpp"

namespace stiefel {

/// Numerical thresholds of the eigenvalue solver. All are relative to max(1, |x|).
struct SolverOptions {
  double imag_cutoff = 1e-8;       // candidates this close to real are accepted outright
  double imag_candidate = 1e-3;    // looser candidates must survive Newton polishing
  double residual_tol = 1e-8;      // acceptance threshold on the relative residual
  double newton_target = 1e-10;    // polishing stops below this relative residual
  int newton_iterations = 30;
  double cluster_radius = 1e-6;
  int eigen_draws = 4;
};

struct RealPoint {
  std::vector<double> x;
  double residual = 0.0;          // max_i |g_i(x)| / (1 + scale_i(x))
  std::size_t multiplicity = 1;   // eigenvalue candidates merged into this point
};

/// max_i |g_i(x)| / (1 + sum_m |c_m x^m|)
double relative_residual(std::span<const Polynomial> system, std::span<const double> x);

/// Damped Gauss-Newton on a (possibly overdetermined) polynomial system, in place.
/// Returns the final relative residual.
double newton_polish(std::span<const Polynomial> system, std::vector<double>& x, const SolverOptions& options);

/// Real points of a zero-dimensional ideal by the eigenvalue (Stickelberger) method:
/// eigenvectors of a generic combination of transposed multiplication matrices are
/// evaluation vectors, coordinates are read off by Rayleigh quotients, then each real
/// candidate is polished against `generators`, verified and deduplicated.
///
/// Points are sorted lexicographically by coordinates rounded to 12 significant digits.
/// Throws EigenFailure if no draw of the random combination decomposes.
std::vector<RealPoint> solve_real_points(const QuotientAlgebra& algebra, std::span<const Polynomial> generators,
                                         const SolverOptions& options = {}, std::uint64_t seed = 0);

/// Convenience overload that computes the Groebner basis itself. Throws NotZeroDimensional.
std::vector<RealPoint> solve_real_points(const Ideal& ideal, const SolverOptions& options = {},
                                         std::uint64_t seed = 0);

/// Round to 12 significant digits; used for deterministic ordering and output.
double round_significant(double value, int digits = 12);

}  // namespace stiefel
