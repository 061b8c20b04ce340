#include "stiefel/lambda_engine.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace stiefel {

std::string to_string(SphereStatus status) {
  switch (status) {
    case SphereStatus::certified_exact:
      return "certified_exact";
    case SphereStatus::certified_numeric:
      return "certified_numeric";
    case SphereStatus::failed:
      return "failed";
  }
  return "failed";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::det:
      return "det";
    case Method::sig:
      return "sig";
    case Method::numeric:
      return "numeric";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "det") return Method::det;
  if (name == "sig") return Method::sig;
  if (name == "numeric") return Method::numeric;
  throw InvalidSpec("unknown method '" + std::string(name) + "'");
}

void FrameMapSpec::validate() const {
  if (!(n > k && k > 1)) throw InvalidSpec("frame map needs n > k > 1");
  if (!variables || variables->size() != static_cast<std::size_t>(n - k + 1))
    throw InvalidSpec("frame map needs n - k + 1 variables");
  if (columns.rows() != static_cast<std::size_t>(n) || columns.cols() != static_cast<std::size_t>(k))
    throw InvalidSpec("frame matrix must be n x k");
  if (!same_ring(columns.variables(), variables)) throw InvalidSpec("frame entries are not in the variable ring");
  if (r2 <= 0) throw InvalidSpec("squared radius must be positive");
  if ((n - k) % 2 == 0) throw UnsupportedDimension("n - k must be odd");
}

Polynomial FrameMapSpec::omega() const {
  Polynomial w = Polynomial::constant(variables, r2);
  for (std::size_t v = 0; v < variables->size(); ++v) {
    Polynomial x = Polynomial::variable(variables, v);
    w -= x * x;
  }
  return w;
}

FrameMapSpec make_frame_spec(int n, int k, Variables vars, const std::vector<std::vector<Polynomial>>& columns,
                             Rational r2) {
  FrameMapSpec spec;
  spec.n = n;
  spec.k = k;
  spec.variables = std::move(vars);
  if (static_cast<int>(columns.size()) != k) throw InvalidSpec("expected k columns");
  for (const auto& col : columns)
    if (static_cast<int>(col.size()) != n) throw InvalidSpec("every column needs n entries");
  spec.columns = PolyMatrix::from_columns(columns);
  spec.r2 = std::move(r2);
  spec.validate();
  return spec;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PolyMatrix mix_rows(const PolyMatrix& a, const RationalMatrix& r) {
  std::vector<Polynomial> data;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Polynomial s(a.variables());
      for (std::size_t l = 0; l < a.rows(); ++l)
        if (r(i, l) != 0) s += a(l, j) * r(i, l);
      data.push_back(std::move(s));
    }
  return PolyMatrix(a.rows(), a.cols(), std::move(data));
}

std::vector<std::size_t> other_columns(std::size_t k, std::size_t distinguished) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < k; ++j)
    if (j != distinguished) cols.push_back(j);
  return cols;
}

std::optional<NormalizationChoice> search_normalization(const PolyMatrix& a, const Ideal& ideal,
                                                        std::optional<RationalMatrix> mixing) {
  const std::size_t k = a.cols();
  auto rows = combinations(a.rows(), k - 1);
  for (std::size_t c = 0; c < k; ++c) {
    auto cols = other_columns(k, c);
    for (const auto& subset : rows) {
      Polynomial minor = determinant(a.submatrix(subset, cols));
      if (minor.is_zero()) continue;
      std::vector<Polynomial> gens = ideal.generators();
      gens.push_back(minor);
      if (contains_one(gens, ideal.order())) return NormalizationChoice{c, subset, minor, true, mixing};
    }
  }
  return std::nullopt;
}

PolyMatrix effective_matrix(const FrameMapSpec& spec, const NormalizationChoice& choice) {
  return choice.row_mixing ? mix_rows(spec.columns, *choice.row_mixing) : spec.columns;
}

double euclidean_norm(std::span<const double> x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// Caches the algebraic and numeric artefacts shared by the routes for one spec.
class FrameContext {
 public:
  FrameContext(const FrameMapSpec& spec, const EngineOptions& options, std::uint64_t seed)
      : spec_(spec), options_(options), seed_(seed), ideal_(minors_ideal(spec)) {}

  const FrameMapSpec& spec() const { return spec_; }
  const EngineOptions& options() const { return options_; }
  const Ideal& ideal() const { return ideal_; }

  const GroebnerBasis& gb() {
    if (!gb_) gb_ = buchberger(ideal_);
    return *gb_;
  }

  bool zero_dimensional() { return is_zero_dimensional(gb()); }

  const QuotientAlgebra& algebra() {
    if (!algebra_) {
      if (!zero_dimensional()) throw HypothesisFailed("minors ideal is not zero-dimensional");
      algebra_.emplace(gb());
    }
    return *algebra_;
  }

  const std::optional<NormalizationChoice>& normalization() {
    if (!normalization_searched_) {
      normalization_searched_ = true;
      try {
        normalization_ = choose_normalization(spec_, ideal_, seed_);
      } catch (const NormalizationNotFound&) {
        normalization_.reset();
      }
    }
    return normalization_;
  }

  const std::vector<RealPoint>& real_points() {
    if (!points_) points_ = solve_real_points(algebra(), ideal_.generators(), options_.solver, seed_);
    return *points_;
  }

  SphereCheck sphere() {
    if (sphere_) return *sphere_;
    SphereCheck check;
    std::vector<Polynomial> gens = ideal_.generators();
    gens.push_back(spec_.omega());
    if (contains_one(gens, ideal_.order())) {
      check.status = SphereStatus::certified_exact;
    } else {
      const double r = std::sqrt(spec_.r2.get_d());
      double closest = std::numeric_limits<double>::infinity();
      for (const auto& p : real_points()) closest = std::min(closest, std::fabs(euclidean_norm(p.x) - r));
      check.min_distance = closest;
      check.status = closest > options_.boundary_tol * r ? SphereStatus::certified_numeric : SphereStatus::failed;
    }
    sphere_ = check;
    return check;
  }

  void require_sphere() {
    if (sphere().status == SphereStatus::failed)
      throw HypothesisFailed("the real variety meets the sphere of radius^2 = " + to_string(spec_.r2));
  }

  const NormalizationChoice& require_normalization() {
    const auto& choice = normalization();
    if (!choice) throw NormalizationNotFound("no certified normalization (1 in I + <m>) was found");
    return *choice;
  }

  std::vector<SolutionPoint> zeros(bool* used_fallback);

 private:
  const FrameMapSpec& spec_;
  EngineOptions options_;
  std::uint64_t seed_;
  Ideal ideal_;
  std::optional<GroebnerBasis> gb_;
  std::optional<QuotientAlgebra> algebra_;
  bool normalization_searched_ = false;
  std::optional<NormalizationChoice> normalization_;
  std::optional<std::vector<RealPoint>> points_;
  std::optional<SphereCheck> sphere_;
};

Eigen::MatrixXd evaluate_dense(const PolyMatrix& m, std::span<const double> x) {
  auto values = m.evaluate(x);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = values[r * m.cols() + c];
  return out;
}

// rank a(x) < k - 1, judged by the second smallest singular value.
bool rank_deficient(const Eigen::MatrixXd& a, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() < 2 || s[0] == 0.0) return true;
  return s[s.size() - 2] <= tol * s[0];
}

std::vector<SolutionPoint> FrameContext::zeros(bool* used_fallback) {
  const auto& points = real_points();
  const auto& choice = normalization();
  if (used_fallback) *used_fallback = !choice.has_value();

  const std::size_t k = static_cast<std::size_t>(spec_.k);
  const double r = std::sqrt(spec_.r2.get_d());
  std::optional<FSystem> certified_system;
  PolyMatrix mixed = spec_.columns;
  if (choice) {
    certified_system = build_F(spec_, *choice);
    mixed = effective_matrix(spec_, *choice);
  }

  std::vector<SolutionPoint> out;
  for (const auto& p : points) {
    SolutionPoint sp;
    sp.x = p.x;
    sp.multiplicity = p.multiplicity;
    Eigen::MatrixXd a = evaluate_dense(spec_.columns, p.x);
    sp.rank_deficient = rank_deficient(a, options_.rank_tol);

    FSystem system;
    if (choice) {
      system = *certified_system;
      Eigen::MatrixXd am = evaluate_dense(mixed, p.x);
      auto cols = other_columns(k, choice->distinguished_column);
      Eigen::MatrixXd lhs(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k - 1));
      Eigen::VectorXd rhs(static_cast<Eigen::Index>(k - 1));
      for (std::size_t i = 0; i < k - 1; ++i) {
        auto row = static_cast<Eigen::Index>(choice->row_subset[i]);
        for (std::size_t j = 0; j < k - 1; ++j)
          lhs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = am(row, static_cast<Eigen::Index>(cols[j]));
        rhs[static_cast<Eigen::Index>(i)] = -am(row, static_cast<Eigen::Index>(choice->distinguished_column));
      }
      Eigen::VectorXd lam = lhs.fullPivLu().solve(rhs);
      sp.lambda.assign(lam.data(), lam.data() + lam.size());
    } else {
      // Kernel direction from the smallest right singular vector.
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
      Eigen::VectorXd beta = svd.matrixV().col(static_cast<Eigen::Index>(k - 1));
      Eigen::Index c = 0;
      beta.cwiseAbs().maxCoeff(&c);
      NormalizationChoice fallback;
      fallback.distinguished_column = static_cast<std::size_t>(c);
      fallback.minor = Polynomial(spec_.variables);
      system = build_F(spec_, fallback);
      for (std::size_t j = 0; j < k; ++j)
        if (static_cast<Eigen::Index>(j) != c) sp.lambda.push_back(beta[static_cast<Eigen::Index>(j)] / beta[c]);
    }
    sp.distinguished_column = system.distinguished_column;

    std::vector<double> unknowns = sp.lambda;
    unknowns.insert(unknowns.end(), sp.x.begin(), sp.x.end());
    sp.residual = newton_polish(system.components, unknowns, options_.solver);
    sp.lambda.assign(unknowns.begin(), unknowns.begin() + static_cast<std::ptrdiff_t>(system.lambda_count));
    sp.x.assign(unknowns.begin() + static_cast<std::ptrdiff_t>(system.lambda_count), unknowns.end());

    LocalDegree deg = local_degree(system, unknowns, options_.degeneracy_tol);
    sp.jacobian_sign = deg.sign;
    sp.relative_det = deg.relative_det;
    sp.degenerate = deg.sign == 0;
    sp.radius2 = 0.0;
    for (double v : sp.x) sp.radius2 += v * v;
    sp.inside_ball = std::sqrt(sp.radius2) < r - options_.boundary_tol * r;
    out.push_back(std::move(sp));
  }
  return out;
}

DetRouteResult run_det(FrameContext& ctx, std::uint64_t seed) {
  const auto& algebra = ctx.algebra();
  ctx.require_normalization();
  ctx.require_sphere();

  DetRouteResult result;
  result.dim = algebra.dim();
  const Polynomial one = Polynomial::constant(ctx.spec().variables, 1);
  const Polynomial omega = ctx.spec().omega();
  for (int attempt = 0; attempt <= ctx.options().functional_retries; ++attempt) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    LinearFunctional phi = random_functional(algebra, s);
    int sign_psi = det_sign(functional_form(algebra, phi, omega, FormLabel::psi_form));
    if (sign_psi == 0) continue;
    int sign_phi = det_sign(functional_form(algebra, phi, one, FormLabel::phi_form));
    result.sign_psi = sign_psi;
    result.sign_phi = sign_phi;
    result.seed_used = s;
    result.attempts = attempt + 1;
    result.implication_holds = sign_phi != 0;
    if (!result.implication_holds)
      throw HypothesisFailed("det[Psi] != 0 but det[Phi] == 0; the functional corollary is violated");
    result.lambda = mod2(static_cast<long>(result.dim) + 1 + (sign_phi + sign_psi) / 2);
    return result;
  }
  throw DegenerateFunctional("det[Psi] vanished for every random functional tried");
}

SigRouteResult run_sig(FrameContext& ctx, const Polynomial& delta_in) {
  const auto& algebra = ctx.algebra();
  ctx.require_normalization();
  ctx.require_sphere();

  Polynomial delta = same_ring(delta_in.variables(), ctx.spec().variables) ? delta_in
                                                                           : embed(delta_in, ctx.spec().variables);
  SymmetricForm theta = trace_form(algebra, delta, FormLabel::theta_delta);
  SymmetricForm theta_omega = trace_form(algebra, ctx.spec().omega() * delta, FormLabel::theta_omega_delta);

  SigRouteResult result;
  result.dim = algebra.dim();
  result.sign_theta = det_sign(theta);
  result.sign_omega_theta = det_sign(theta_omega);
  if (result.sign_theta == 0 || result.sign_omega_theta == 0)
    throw DegenerateForm("trace form Theta_delta or Theta_{omega*delta} is degenerate");
  result.signature_theta = signature(theta);
  result.signature_omega_theta = signature(theta_omega);
  result.lambda = mod2((result.signature_theta + result.signature_omega_theta) / 2);
  result.lambda_det_variant =
      mod2(static_cast<long>(result.dim) + 1 + (result.sign_theta + result.sign_omega_theta) / 2);
  return result;
}

NumericRouteResult run_numeric(FrameContext& ctx) {
  ctx.require_sphere();
  NumericRouteResult result;
  result.points = ctx.zeros(&result.fallback);
  bool all_regular = true;
  for (const auto& p : result.points) {
    if (!p.inside_ball) continue;
    ++result.inside_count;
    if (p.degenerate || p.rank_deficient) all_regular = false;
    result.degree_sum += p.jacobian_sign;
  }
  if (!all_regular) throw DegenerateZero("a zero of F inside the ball is degenerate");
  result.lambda = mod2(result.degree_sum);
  result.count_parity = mod2(static_cast<long>(result.inside_count));
  if (*result.count_parity != result.lambda) throw Error("point-count parity differs from degree-sum parity");
  return result;
}

}  // namespace

Ideal minors_ideal(const FrameMapSpec& spec) { return Ideal(spec.variables, all_maximal_minors(spec.columns)); }

NormalizationChoice choose_normalization(const FrameMapSpec& spec, const Ideal& ideal, std::uint64_t seed) {
  if (auto choice = search_normalization(spec.columns, ideal, std::nullopt)) return *choice;

  std::uint64_t state = seed ^ 0x6d69786eULL;
  const std::size_t n = spec.columns.rows();
  for (int attempt = 0; attempt < 4; ++attempt) {
    RationalMatrix r = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) r(i, j) = static_cast<long>(splitmix64(state) % 7) - 3;
    if (auto choice = search_normalization(mix_rows(spec.columns, r), ideal, r)) return *choice;
  }
  throw NormalizationNotFound("no column/row choice certifies 1 in I + <m>");
}

FSystem build_F(const FrameMapSpec& spec, const NormalizationChoice& choice) {
  const std::size_t k = static_cast<std::size_t>(spec.k);
  const std::size_t n = static_cast<std::size_t>(spec.n);
  PolyMatrix a = effective_matrix(spec, choice);
  auto cols = other_columns(k, choice.distinguished_column);

  std::vector<std::string> names;
  for (std::size_t j : cols) {
    std::string name = "lambda" + std::to_string(j + 1);
    while (std::find(spec.variables->begin(), spec.variables->end(), name) != spec.variables->end()) name = "_" + name;
    names.push_back(name);
  }
  names.insert(names.end(), spec.variables->begin(), spec.variables->end());

  FSystem f;
  f.unknowns = make_variables(names);
  f.distinguished_column = choice.distinguished_column;
  f.lambda_count = k - 1;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial fi = embed(a(i, choice.distinguished_column), f.unknowns);
    for (std::size_t l = 0; l < cols.size(); ++l)
      fi += Polynomial::variable(f.unknowns, l) * embed(a(i, cols[l]), f.unknowns);
    f.components.push_back(std::move(fi));
  }
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v) jac.push_back(differentiate(f.components[i], v));
  f.jacobian = PolyMatrix(n, n, std::move(jac));
  return f;
}

std::vector<double> atilde_eval(const FrameMapSpec& spec, std::span<const double> beta, std::span<const double> x) {
  const std::size_t k = static_cast<std::size_t>(spec.k);
  if (beta.size() != k) throw DimensionError("beta must have k entries");
  if (std::fabs(euclidean_norm(beta) - 1.0) > 1e-8) throw DimensionError("beta must lie on the unit sphere");
  auto a = spec.columns.evaluate(x);
  std::vector<double> out(spec.columns.rows(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) out[i] += beta[j] * a[i * k + j];
  return out;
}

SphereCheck sphere_disjointness_check(const FrameMapSpec& spec, const Ideal& ideal, const EngineOptions& options,
                                      std::uint64_t seed) {
  (void)ideal;  // the context rebuilds the same ideal from spec
  FrameContext ctx(spec, options, seed);
  try {
    return ctx.sphere();
  } catch (const Error&) {
    return SphereCheck{};
  }
}

LocalDegree local_degree(const FSystem& system, std::span<const double> unknowns, double degeneracy_tol) {
  Eigen::MatrixXd j = evaluate_dense(system.jacobian, unknowns);
  // Row equilibration: compare |det| against the product of the row maxima.
  double scale = 1.0;
  for (Eigen::Index r = 0; r < j.rows(); ++r) {
    double row_max = j.row(r).cwiseAbs().maxCoeff();
    if (row_max == 0.0) return {0, 0.0};
    scale *= row_max;
  }
  double det = j.fullPivLu().determinant();
  double rel = std::fabs(det) / scale;
  if (!(rel >= degeneracy_tol)) return {0, rel};
  return {det > 0 ? 1 : -1, rel};
}

int local_degree(const FSystem& system, const SolutionPoint& point, double degeneracy_tol) {
  std::vector<double> unknowns = point.lambda;
  unknowns.insert(unknowns.end(), point.x.begin(), point.x.end());
  return local_degree(system, unknowns, degeneracy_tol).sign;
}

std::vector<SolutionPoint> real_zeros(const FrameMapSpec& spec, const EngineOptions& options, std::uint64_t seed,
                                      bool* used_fallback) {
  spec.validate();
  FrameContext ctx(spec, options, seed);
  return ctx.zeros(used_fallback);
}

DetRouteResult lambda_det(const FrameMapSpec& spec, std::uint64_t seed, const EngineOptions& options) {
  spec.validate();
  FrameContext ctx(spec, options, seed);
  return run_det(ctx, seed);
}

SigRouteResult lambda_signature(const FrameMapSpec& spec, const Polynomial& delta, const EngineOptions& options) {
  spec.validate();
  FrameContext ctx(spec, options, 0);
  return run_sig(ctx, delta);
}

NumericRouteResult lambda_numeric(const FrameMapSpec& spec, std::uint64_t seed, const EngineOptions& options) {
  spec.validate();
  FrameContext ctx(spec, options, seed);
  return run_numeric(ctx);
}

LambdaReport compute_lambda(const FrameMapSpec& spec, const std::set<Method>& methods, std::uint64_t seed,
                            const std::optional<Polynomial>& delta, const EngineOptions& options) {
  spec.validate();
  FrameContext ctx(spec, options, seed);
  LambdaReport report;
  report.seed = seed;

  bool zero_dim = ctx.zero_dimensional();
  report.hypothesis_checks.zero_dimensional = zero_dim;
  if (zero_dim) {
    report.dim_A = ctx.algebra().dim();
    report.normalization = ctx.normalization();
    report.hypothesis_checks.normalization_certified = report.normalization.has_value();
    try {
      report.hypothesis_checks.sphere_disjoint = ctx.sphere().status;
    } catch (const Error&) {
      report.hypothesis_checks.sphere_disjoint = SphereStatus::failed;
    }
  }

  std::vector<std::pair<Method, int>> values;
  for (Method m : methods) {
    report.methods_run.push_back(m);
    try {
      switch (m) {
        case Method::det: {
          try {
            report.det = run_det(ctx, seed);
            report.hypothesis_checks.psi_nondegenerate = true;
          } catch (const DegenerateFunctional&) {
            report.hypothesis_checks.psi_nondegenerate = false;
            throw;
          }
          values.emplace_back(m, report.det->lambda);
          break;
        }
        case Method::sig: {
          if (!delta) throw HypothesisFailed("the signature route needs a caller-supplied delta");
          report.sig = run_sig(ctx, *delta);
          values.emplace_back(m, report.sig->lambda);
          if (report.sig->lambda_det_variant != report.sig->lambda) report.agreement = false;
          break;
        }
        case Method::numeric: {
          try {
            report.numeric = run_numeric(ctx);
            report.hypothesis_checks.all_zeros_nondegenerate = true;
          } catch (const DegenerateZero&) {
            report.hypothesis_checks.all_zeros_nondegenerate = false;
            throw;
          }
          values.emplace_back(m, report.numeric->lambda);
          break;
        }
      }
    } catch (const Error& e) {
      report.failures[m] = e.what();
    }
  }

  for (const auto& [m, v] : values)
    if (v != values.front().second) report.agreement = false;
  if (values.empty()) throw AllRoutesFailed("no route produced a value", report);
  if (!report.agreement) throw RouteDisagreement("routes disagree on Lambda", report);
  report.lambda = values.front().second;
  return report;
}

}  // namespace stiefel
