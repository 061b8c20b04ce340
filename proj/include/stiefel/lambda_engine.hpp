#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stiefel/errors.hpp"
#include "stiefel/groebner.hpp"
#include "stiefel/matrix.hpp"
#include "stiefel/quotient_algebra.hpp"
#include "stiefel/real_solver.hpp"

namespace stiefel {

/// A polynomial frame map a: R^{n-k+1} -> M_k(R^n) restricted to the sphere of radius sqrt(r2).
struct FrameMapSpec {
  int n = 0;
  int k = 0;
  Variables variables;   // n - k + 1 names
  PolyMatrix columns;    // n x k, column j is the frame vector a_j(x)
  Rational r2;           // squared radius

  /// Throws InvalidSpec for shape errors and UnsupportedDimension when n - k is even.
  void validate() const;

  /// omega(x) = r2 - x_1^2 - ... - x_{n-k+1}^2
  Polynomial omega() const;
};

/// Builds and validates a spec from columns of polynomials.
FrameMapSpec make_frame_spec(int n, int k, Variables vars, const std::vector<std::vector<Polynomial>>& columns,
                             Rational r2);

/// Tunable thresholds of the numeric pieces of the engine.
struct EngineOptions {
  SolverOptions solver;
  double boundary_tol = 1e-6;      // relative to r: | |x| - r | below this is "on the sphere"
  double degeneracy_tol = 1e-8;    // |det J| / prod_i max_j |J_ij| below this is a degenerate zero
  double refute_tol = 1e-10;       // below this a degenerate zero is decisively degenerate
  double rank_tol = 1e-8;          // singular value threshold, relative to the largest one
  int functional_retries = 8;
};

/// Which column carries the coefficient 1 in F, and the minor certifying that choice.
struct NormalizationChoice {
  std::size_t distinguished_column = 0;
  std::vector<std::size_t> row_subset;   // k - 1 rows of the (possibly mixed) matrix
  Polynomial minor;                      // det of the other columns on row_subset
  bool certified = false;                // 1 in I + <minor>
  /// Constant unimodular row operation applied before choosing rows; empty when unused.
  std::optional<RationalMatrix> row_mixing;
};

/// F(lambda, x) = a(x) * (1, lambda) with the distinguished column first.
struct FSystem {
  Variables unknowns;                      // lambda names, then the x variables
  std::vector<Polynomial> components;      // n polynomials
  PolyMatrix jacobian;                     // n x n, partials w.r.t. unknowns
  std::size_t distinguished_column = 0;
  std::size_t lambda_count = 0;
};

enum class SphereStatus { certified_exact, certified_numeric, failed };

std::string to_string(SphereStatus status);

struct SphereCheck {
  SphereStatus status = SphereStatus::failed;
  std::optional<double> min_distance;  // min | |x| - r | over real points of V(I), when solved
};

/// A real zero of F together with its local degree data.
struct SolutionPoint {
  std::vector<double> x;
  std::vector<double> lambda;
  double residual = 0.0;        // relative residual of F at (lambda, x)
  int jacobian_sign = 0;        // local degree, 0 when degenerate
  double relative_det = 0.0;    // |det J| over the product of row maxima
  double radius2 = 0.0;
  bool inside_ball = false;
  bool degenerate = false;
  std::size_t multiplicity = 1;       // eigenvalue cluster size from the solver
  std::size_t distinguished_column = 0;
  bool rank_deficient = false;        // rank a(x) < k - 1
};

struct LocalDegree {
  int sign = 0;
  double relative_det = 0.0;
};

enum class Method { det, sig, numeric };

std::string to_string(Method method);
Method parse_method(std::string_view name);

struct DetRouteResult {
  int lambda = 0;
  std::size_t dim = 0;
  int sign_phi = 0;
  int sign_psi = 0;
  std::uint64_t seed_used = 0;
  int attempts = 0;
  bool implication_holds = true;  // det Psi != 0 implies det Phi != 0
};

struct SigRouteResult {
  int lambda = 0;                  // from signatures
  int lambda_det_variant = 0;      // dim + 1 + (sgn det + sgn det) / 2
  std::size_t dim = 0;
  int signature_theta = 0;
  int signature_omega_theta = 0;
  int sign_theta = 0;
  int sign_omega_theta = 0;
};

struct NumericRouteResult {
  int lambda = 0;
  int degree_sum = 0;                  // signed sum over inside zeros
  std::size_t inside_count = 0;
  std::optional<int> count_parity;     // set when every inside zero is nondegenerate
  bool fallback = false;               // least-squares lambda recovery was used
  std::vector<SolutionPoint> points;   // every real zero, inside or not
};

struct HypothesisChecks {
  std::optional<bool> zero_dimensional;
  std::optional<bool> normalization_certified;
  std::optional<bool> psi_nondegenerate;
  std::optional<SphereStatus> sphere_disjoint;
  std::optional<bool> all_zeros_nondegenerate;
};

struct LambdaReport {
  std::optional<std::size_t> dim_A;
  std::optional<int> lambda;
  std::vector<Method> methods_run;
  std::optional<DetRouteResult> det;
  std::optional<SigRouteResult> sig;
  std::optional<NumericRouteResult> numeric;
  std::map<Method, std::string> failures;
  HypothesisChecks hypothesis_checks;
  std::optional<NormalizationChoice> normalization;
  std::uint64_t seed = 0;
  bool agreement = true;
};

/// Raised by compute_lambda; carries the partial report for diagnostics.
class LambdaFailure : public Error {
 public:
  LambdaFailure(const std::string& message, LambdaReport report) : Error(message), report_(std::move(report)) {}
  const LambdaReport& report() const noexcept { return report_; }

 private:
  LambdaReport report_;
};

class AllRoutesFailed : public LambdaFailure {
 public:
  using LambdaFailure::LambdaFailure;
};

class RouteDisagreement : public LambdaFailure {
 public:
  using LambdaFailure::LambdaFailure;
};

/// Ideal of all k x k minors, row subsets in lexicographic order.
Ideal minors_ideal(const FrameMapSpec& spec);

/// First certified (column, row subset) in ascending order, then random unimodular row
/// mixings as a last resort. Throws NormalizationNotFound.
NormalizationChoice choose_normalization(const FrameMapSpec& spec, const Ideal& ideal, std::uint64_t seed = 0);

FSystem build_F(const FrameMapSpec& spec, const NormalizationChoice& choice);

/// beta_1 a_1(x) + ... + beta_k a_k(x); beta must be a unit vector.
std::vector<double> atilde_eval(const FrameMapSpec& spec, std::span<const double> beta, std::span<const double> x);

SphereCheck sphere_disjointness_check(const FrameMapSpec& spec, const Ideal& ideal, const EngineOptions& options = {},
                                      std::uint64_t seed = 0);

/// Sign of det DF at the point (lambda, x); 0 when |det| is below the threshold
/// relative to the product of the row maxima of DF.
LocalDegree local_degree(const FSystem& system, std::span<const double> unknowns, double degeneracy_tol = 1e-8);
int local_degree(const FSystem& system, const SolutionPoint& point, double degeneracy_tol = 1e-8);

/// All real zeros of F (one per point of the real variety), with degrees and ball classification.
/// Uses the certified normalization when one exists, least-squares lambda recovery otherwise.
std::vector<SolutionPoint> real_zeros(const FrameMapSpec& spec, const EngineOptions& options = {},
                                      std::uint64_t seed = 0, bool* used_fallback = nullptr);

DetRouteResult lambda_det(const FrameMapSpec& spec, std::uint64_t seed = 0, const EngineOptions& options = {});
SigRouteResult lambda_signature(const FrameMapSpec& spec, const Polynomial& delta, const EngineOptions& options = {});
NumericRouteResult lambda_numeric(const FrameMapSpec& spec, std::uint64_t seed = 0, const EngineOptions& options = {});

/// Runs the requested routes, aggregates hypothesis checks and cross-validates.
/// Throws AllRoutesFailed or RouteDisagreement (both carry the report).
LambdaReport compute_lambda(const FrameMapSpec& spec, const std::set<Method>& methods, std::uint64_t seed = 0,
                            const std::optional<Polynomial>& delta = std::nullopt, const EngineOptions& options = {});

/// Reduces an integer into {0, 1}.
inline int mod2(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace stiefel
