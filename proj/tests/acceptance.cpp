// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << "FAILED " << what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every det-route result seen anywhere, for the det[Psi] != 0 => det[Phi] != 0 audit.
std::size_t g_corollary_calls = 0;
std::size_t g_corollary_violations = 0;

void audit(const DetRouteResult& r) {
  ++g_corollary_calls;
  if (!r.implication_holds || r.sign_phi == 0) ++g_corollary_violations;
}

DetRouteResult audited_det(const FrameMapSpec& spec, std::uint64_t seed = 0) {
  DetRouteResult r = lambda_det(spec, seed);
  audit(r);
  return r;
}

// ---------------------------------------------------------------------------
// Worked examples

void worked_mapping(Outcome& o, const std::vector<std::vector<std::string>>& columns, std::size_t dim,
                    const std::vector<std::pair<Rational, int>>& expected) {
  auto t0 = Clock::now();
  for (const auto& [r2, lambda] : expected) {
    auto spec = frame(columns, r2);
    try {
      auto report = compute_lambda(spec, {Method::det, Method::numeric}, 0);
      audit(*report.det);
      o.require(report.dim_A == dim, "dim A at r2=" + to_string(r2));
      o.require(report.det->lambda == lambda, "det route at r2=" + to_string(r2));
      o.require(report.numeric->lambda == lambda, "numeric route at r2=" + to_string(r2));
      o.detail << "r2=" << to_string(r2) << ": det " << report.det->lambda << ", numeric " << report.numeric->lambda
               << "; ";
    } catch (const Error& e) {
      o.require(false, "r2=" + to_string(r2) + ": " + e.what());
    }
  }
  double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime bound");
  o.detail << "dim A " << dim << ", " << secs << " s";
}

Outcome criterion1() {
  Outcome o;
  worked_mapping(o, kMappingA, 23, {{1, 1}, {4, 1}, {100, 0}});
  return o;
}

Outcome criterion2() {
  Outcome o;
  worked_mapping(o, kMappingB, 21, {{1, 0}, {Rational(7, 2), 1}, {100, 0}});
  return o;
}

int parity(const std::vector<std::string>& f, Rational r2) {
  auto report = crosscap_parity(map2(f, std::move(r2)), {Method::det, Method::numeric});
  if (report.lambda.det) audit(*report.lambda.det);
  return *report.parity;
}

Outcome criterion3() {
  Outcome o;
  try {
    auto big = map2(kCrosscap1, 10000);
    std::size_t count = count_singular_points(big);
    o.require(count == 3, "count = 3");
    o.require(certify_crosscaps_only(big) == CrosscapVerdict::certified, "all cross-caps certified");
    int p1 = parity(kCrosscap1, 1), p10 = parity(kCrosscap1, 100), p5 = parity(kCrosscap1, 25);
    o.require(p1 == 1 && p10 == 1 && p5 == 0, "parities 1, 1, 0");
    o.detail << "count " << count << ", parities r=1:" << p1 << " r=10:" << p10 << " r=5:" << p5;
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  try {
    std::size_t count = count_singular_points(map2(kCrosscap2, 10000));
    o.require(count == 14, "count = 14");
    int p1 = parity(kCrosscap2, 1), p01 = parity(kCrosscap2, Rational(1, 100)), p10 = parity(kCrosscap2, 100);
    o.require(p1 == 1 && p01 == 0 && p10 == 0, "parities 1, 0, 0");
    o.detail << "count " << count << ", parities r=1:" << p1 << " r=1/10:" << p01 << " r=10:" << p10;
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  try {
    auto f = map2(kCrosscap3, 1);
    auto spec = jacobian_frame(f);
    auto sphere = sphere_disjointness_check(spec, minors_ideal(spec));
    o.require(sphere.status != SphereStatus::failed, "sphere check at r=1");
    auto report = crosscap_parity(f, {Method::det, Method::numeric}, 0, std::nullopt, {}, true);
    if (report.lambda.det) audit(*report.lambda.det);
    o.require(report.parity == 1, "Lambda = 1");
    o.require(report.all_crosscaps == CrosscapVerdict::refuted, "certify_crosscaps_only refutes");
    o.detail << "sphere " << to_string(sphere.status) << ", Lambda " << *report.parity << ", verdict "
             << to_string(*report.all_crosscaps);
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::set<Method> all = {Method::det, Method::sig, Method::numeric};
  auto check = [&](const std::string& name, const FrameMapSpec& spec, int expected) {
    try {
      Polynomial one = Polynomial::constant(spec.variables, 1);
      auto report = compute_lambda(spec, all, 0, one);
      audit(*report.det);
      o.require(report.failures.empty(), name + ": every route runs");
      o.require(report.det->lambda == expected && report.sig->lambda == expected &&
                    report.sig->lambda_det_variant == expected && report.numeric->lambda == expected,
                name + ": all routes give " + std::to_string(expected));
      o.detail << name << " -> " << *report.lambda << " (det, sig, numeric); ";
    } catch (const Error& e) {
      o.require(false, name + ": " + e.what());
    }
  };
  check("constant frame", frame({{"1", "0", "0"}, {"0", "1", "0"}}, 1), 0);
  check("generator n=3", frame({{"1", "0", "0"}, {"0", "x", "y"}}, 1), 1);
  auto v4 = make_variables({"x1", "x2", "x3", "x4"});
  check("generator n=5", frame({{"1", "0", "0", "0", "0"}, {"0", "x1", "x2", "x3", "x4"}}, 1, v4), 1);
  auto v2 = make_variables({"x1", "x2"});
  check("generator n=4 k=3", frame({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "x1", "x2"}}, 1, v2), 1);
  return o;
}

// ---------------------------------------------------------------------------
// Property suites

constexpr int kCases = 100;

// Random 3x2 frame in (x, y) with small dense entries; callers skip instances whose
// hypotheses fail.
FrameMapSpec random_instance(std::mt19937_64& rng) {
  std::vector<std::vector<Polynomial>> cols(2);
  std::uniform_int_distribution<int> c(-4, 4);
  for (auto& col : cols)
    for (int i = 0; i < 3; ++i) {
      Polynomial p = random_poly(rng, xy(), 2, 3, 4);
      p += Polynomial::constant(xy(), c(rng));
      col.push_back(std::move(p));
    }
  static const Rational radii[] = {Rational(1, 4), Rational(1), Rational(4), Rational(9), Rational(25)};
  return make_frame_spec(3, 2, xy(), cols, radii[rng() % 5]);
}

// A usable instance: det route succeeds.
std::optional<std::pair<FrameMapSpec, int>> draw(std::mt19937_64& rng) {
  for (int tries = 0; tries < 50; ++tries) {
    FrameMapSpec spec = random_instance(rng);
    try {
      int lambda = audited_det(spec).lambda;
      return std::make_pair(spec, lambda);
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

FrameMapSpec with_columns(const FrameMapSpec& base, const std::vector<std::vector<Polynomial>>& cols) {
  return make_frame_spec(base.n, base.k, base.variables, cols, base.r2);
}

std::vector<std::vector<Polynomial>> columns_of(const FrameMapSpec& s) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t j = 0; j < s.columns.cols(); ++j) cols.push_back(s.columns.column(j));
  return cols;
}

FrameMapSpec elementary_operation(const FrameMapSpec& s, std::mt19937_64& rng, std::string& label) {
  auto cols = columns_of(s);
  Rational c = random_rational(rng);
  if (c == 0) c = 3;
  switch (rng() % 5) {
    case 0:
      std::swap(cols[0], cols[1]);
      label = "column swap";
      break;
    case 1:
      for (auto& p : cols[rng() % 2]) p *= c;
      label = "column scale";
      break;
    case 2: {
      std::size_t i = rng() % 2, j = 1 - i;
      for (std::size_t r = 0; r < cols[i].size(); ++r) cols[i][r] += cols[j][r] * c;
      label = "column addition";
      break;
    }
    case 3: {
      std::size_t a = rng() % 3, b = (a + 1 + rng() % 2) % 3;
      for (auto& col : cols) col[a] += col[b] * c;
      label = "row addition";
      break;
    }
    default: {
      std::size_t a = rng() % 3, b = (a + 1 + rng() % 2) % 3;
      for (auto& col : cols) {
        std::swap(col[a], col[b]);
        col[a] *= c;
      }
      label = "row swap and scale";
      break;
    }
  }
  return with_columns(s, cols);
}

bool suite_elementary(std::ostringstream& out) {
  std::mt19937_64 rng(7001);
  int ok = 0, bad = 0, odd = 0;
  for (int i = 0; i < kCases; ++i) {
    auto inst = draw(rng);
    if (!inst) continue;
    odd += inst->second;
    std::string label;
    auto changed = elementary_operation(inst->first, rng, label);
    try {
      if (audited_det(changed).lambda == inst->second)
        ++ok;
      else
        ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  out << "elementary ops " << ok << "/" << ok + bad << " (" << odd << " with Lambda 1)";
  return bad == 0 && ok >= kCases;
}

bool suite_orthogonal(std::ostringstream& out) {
  std::mt19937_64 rng(7002);
  int ok = 0, bad = 0;
  auto x = P("x", xy()), y = P("y", xy());
  const std::vector<std::vector<Polynomial>> maps = {
      {y, x}, {-x, y}, {x, -y}, {-y, x}, {y, -x}, {-x, -y},
      {x * Rational(3, 5) - y * Rational(4, 5), x * Rational(4, 5) + y * Rational(3, 5)}};
  for (int i = 0; i < kCases; ++i) {
    auto inst = draw(rng);
    if (!inst) continue;
    const auto& q = maps[rng() % maps.size()];
    auto cols = columns_of(inst->first);
    for (auto& col : cols)
      for (auto& p : col) p = substitute(p, q);
    try {
      if (audited_det(with_columns(inst->first, cols)).lambda == inst->second)
        ++ok;
      else
        ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  out << "orthogonal substitution " << ok << "/" << ok + bad;
  return bad == 0 && ok >= kCases;
}

bool suite_radius(std::ostringstream& out) {
  std::mt19937_64 rng(7003);
  int ok = 0, bad = 0, attempts = 0;
  while (ok + bad < kCases && attempts++ < 20 * kCases) {
    auto inst = draw(rng);
    if (!inst) continue;
    const auto& spec = inst->first;
    std::vector<double> norms;
    try {
      for (const auto& p : solve_real_points(minors_ideal(spec))) norms.push_back(std::hypot(p.x[0], p.x[1]));
    } catch (const Error&) {
      continue;
    }
    std::sort(norms.begin(), norms.end());
    // Pick a gap between consecutive point radii (or beyond the last) and two radii inside it.
    norms.insert(norms.begin(), 0.0);
    std::size_t g = rng() % norms.size();
    double lo = norms[g], hi = g + 1 < norms.size() ? norms[g + 1] : lo + 10.0;
    if (hi - lo < 1e-3) continue;
    auto radius2 = [&](double frac) {
      double r = lo + frac * (hi - lo);
      Rational q(static_cast<long>(std::llround(r * r * 1000)), 1000);
      q.canonicalize();
      return q;
    };
    Rational a = radius2(0.3), b = radius2(0.7);
    if (a <= 0 || a == b) continue;
    try {
      int la = audited_det(make_frame_spec(3, 2, xy(), columns_of(spec), a)).lambda;
      int lb = audited_det(make_frame_spec(3, 2, xy(), columns_of(spec), b)).lambda;
      (la == lb ? ok : bad) += 1;
    } catch (const Error&) {
      continue;
    }
  }
  out << "radius consistency " << ok << "/" << ok + bad;
  return bad == 0 && ok >= kCases;
}

bool suite_agreement_and_bridge(std::ostringstream& agree_out, std::ostringstream& bridge_out, bool& bridge_ok) {
  std::mt19937_64 rng(7004);
  int agree = 0, disagree = 0, bridged = 0, unbridged = 0, attempts = 0;
  while ((agree < kCases || bridged < kCases) && attempts++ < 20 * kCases) {
    FrameMapSpec spec = random_instance(rng);
    LambdaReport report;
    try {
      report = compute_lambda(spec, {Method::det, Method::sig, Method::numeric}, attempts,
                              Polynomial::constant(xy(), 1));
    } catch (const RouteDisagreement& e) {
      ++disagree;
      continue;
    } catch (const Error&) {
      continue;
    }
    if (report.det) audit(*report.det);
    int successes = (report.det ? 1 : 0) + (report.sig ? 1 : 0) + (report.numeric ? 1 : 0);
    if (successes >= 2) ++agree;
    if (report.numeric && report.numeric->count_parity) {
      // Count real points of V(I) strictly inside the ball, independently of F.
      const double r = std::sqrt(spec.r2.get_d());
      std::size_t inside = 0;
      for (const auto& p : solve_real_points(minors_ideal(spec), {}, attempts))
        if (std::hypot(p.x[0], p.x[1]) < r * (1 - 1e-6)) ++inside;
      if (static_cast<int>(inside % 2) == mod2(report.numeric->degree_sum))
        ++bridged;
      else
        ++unbridged;
    }
  }
  agree_out << "route agreement " << agree << "/" << agree + disagree;
  bridge_out << "parity bridge " << bridged << "/" << bridged + unbridged;
  bridge_ok = unbridged == 0 && bridged >= kCases;
  return disagree == 0 && agree >= kCases;
}

bool suite_signature(std::ostringstream& out) {
  std::mt19937_64 rng(7005);
  int ok = 0, bad = 0;
  while (ok + bad < 200) {
    std::size_t n = 1 + rng() % 8;
    RationalMatrix m(n, n);
    Eigen::MatrixXd d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = m(j, i) = random_rational(rng, 7, 5);
        d(i, j) = d(j, i) = m(i, j).get_d();
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
    int count = 0;
    bool separated = true;
    for (double ev : es.eigenvalues()) {
      separated = separated && std::fabs(ev) > 1e-6;
      count += ev > 0 ? 1 : -1;
    }
    if (!separated) continue;
    (signature(m) == count ? ok : bad) += 1;
  }
  out << "signature vs eigencount " << ok << "/" << ok + bad;
  return bad == 0;
}

Outcome criterion7() {
  Outcome o;
  std::ostringstream a, b, c, d, e, f;
  bool bridge_ok = false;
  o.require(suite_elementary(a), "elementary operations");
  o.require(suite_orthogonal(b), "orthogonal substitution");
  o.require(suite_radius(c), "radius consistency");
  o.require(suite_agreement_and_bridge(d, e, bridge_ok), "route agreement");
  o.require(bridge_ok, "parity bridge");
  o.require(suite_signature(f), "signature vs eigencount");
  o.require(g_corollary_violations == 0 && g_corollary_calls >= static_cast<std::size_t>(kCases),
            "det[Psi] != 0 implies det[Phi] != 0");
  o.detail << a.str() << "; " << b.str() << "; " << c.str() << "; " << d.str() << "; " << e.str() << "; " << f.str()
           << "; corollary implication " << g_corollary_calls - g_corollary_violations << "/" << g_corollary_calls;
  return o;
}

// ---------------------------------------------------------------------------
// Umbrella micro-oracle

Outcome criterion8() {
  Outcome o;
  try {
    auto f = map2(kUmbrella, 1);
    auto spec = jacobian_frame(f);
    Ideal ideal = minors_ideal(spec);
    auto gb = buchberger(ideal);
    o.require(gb.elements() == std::vector<Polynomial>{P("y", xy()), P("x", xy())}, "I = <x, y>");
    QuotientAlgebra algebra(gb);
    o.require(algebra.dim() == 1, "dim A = 1");

    auto choice = choose_normalization(spec, ideal);
    auto F = build_F(spec, choice);
    // Hand cofactor expansion at (lambda, x, y) = 0: rows (0,2,0), (1,0,0), (0,0,1), det -2.
    const RationalMatrix fixture{{0, 2, 0}, {1, 0, 0}, {0, 0, 1}};
    RationalMatrix j = F.jacobian.evaluate(std::vector<Rational>{0, 0, 0});
    o.require(j == fixture, "Jacobian fixture");
    o.require(determinant(j) == -2, "det = -2");

    for (Rational r2 : {Rational(1, 10000), Rational(1, 4), Rational(1), Rational(9), Rational(10000)}) {
      auto report = crosscap_parity(map2(kUmbrella, r2), {Method::det, Method::sig, Method::numeric}, 0,
                                    P("1", xy()));
      audit(*report.lambda.det);
      o.require(report.parity == 1, "parity 1 at r2=" + to_string(r2));
      const auto& pts = report.lambda.numeric->points;
      o.require(pts.size() == 1 && !pts[0].degenerate && pts[0].jacobian_sign == -1,
                "single nondegenerate zero with sign -1 at r2=" + to_string(r2));
    }
    o.detail << "I = <x, y>, dim 1, Jacobian sign -1, parity 1 at 5 radii";
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked example a: dim 23, Lambda 1/1/0 by det and numeric routes", criterion1},
      {"worked example b: dim 21, Lambda 0/1/0 by det and numeric routes", criterion2},
      {"cross-cap example 1: 3 points, certified, parities 1/1/0", criterion3},
      {"cross-cap example 2: 14 points, parities 1/0/0", criterion4},
      {"cross-cap example 3: sphere certified, Lambda 1, refuted", criterion5},
      {"generators: constant frame 0, standard generator 1", criterion6},
      {"property suites", criterion7},
      {"Whitney umbrella oracle", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o = criteria[i].second();
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << " ["
              << o.detail.str() << "] (" << seconds_since(t0) << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
