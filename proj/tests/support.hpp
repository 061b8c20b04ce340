#pragma once

#include <random>
#include <string>
#include <vector>

#include "stiefel/crosscap.hpp"
#include "stiefel/lambda_engine.hpp"
#include "stiefel/parser.hpp"

namespace testing {

using namespace stiefel;

inline Polynomial P(const std::string& text, const Variables& vars) { return parse_polynomial(text, vars); }

inline Variables xy() {
  static const Variables vars = make_variables({"x", "y"});
  return vars;
}

inline FrameMapSpec frame(const std::vector<std::vector<std::string>>& columns, Rational r2,
                          const Variables& vars = xy()) {
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& c : columns) {
    cols.emplace_back();
    for (const auto& s : c) cols.back().push_back(P(s, vars));
  }
  int n = static_cast<int>(columns.front().size());
  int k = static_cast<int>(columns.size());
  return make_frame_spec(n, k, vars, cols, std::move(r2));
}

inline SmoothMapSpec map2(const std::vector<std::string>& components, Rational r2) {
  std::vector<Polynomial> comps;
  for (const auto& s : components) comps.push_back(P(s, xy()));
  return make_map_spec(2, xy(), comps, std::move(r2));
}

inline const std::vector<std::vector<std::string>> kMappingA = {
    {"5*x^2*y+2*y^2+3*x+2", "5*x*y^2+2*x^2+5*x+3", "2*x^3+4*x*y+2*y+1"},
    {"5*x^2*y+y^2+3*x+3", "y^3+2*x*y+3*y+2", "4*x^3+x^2+3*y+5"}};
inline const std::vector<std::vector<std::string>> kMappingB = {
    {"4*x*y^2+3*x^2+y+5", "5*x*y^2+5*y^2+y+5", "3*x^2*y+3*x^2+x+2"},
    {"y^3+4*x*y+y+1", "y^3+x^2+4*y+5", "5*y^3+5*x*y+5*y+2"}};
inline const std::vector<std::string> kCrosscap1 = {"15*x*y^3+19*y^3+9*x^2+6*y", "25*y^3+15*x^2", "7*y^3+21*x*y"};
inline const std::vector<std::string> kCrosscap2 = {"2*x*y^3+7*x^2*y",
                                                    "6*x*y^5+29*x^4*y+20*y^4+26*y^3+27*x^2+9*x",
                                                    "21*x^2*y^4+7*x^2*y^3+11*x*y^3+20*x*y^2+10*x*y+8*y"};
inline const std::vector<std::string> kCrosscap3 = {"21*x^2*y^2+13*x*y^2+7*y^2+27*y", "16*x*y^4+7*y^4+19*x^3",
                                                    "7*x*y^4+6*x^3*y+21*x^2*y"};
inline const std::vector<std::string> kUmbrella = {"x^2", "y", "x*y"};

/// Random polynomial with small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const Variables& vars, int max_degree, int terms,
                              int coeff = 5) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> e(0, max_degree);
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(vars->size());
    int budget = max_degree;
    for (std::size_t v = 0; v < vars->size(); ++v) {
      int d = std::min(budget, e(rng));
      m[v] = static_cast<Monomial::Exponent>(d);
      budget -= d;
    }
    p += Polynomial::term(vars, m, c(rng));
  }
  return p;
}

inline Rational random_rational(std::mt19937_64& rng, int num = 9, int den = 4) {
  std::uniform_int_distribution<int> a(-num, num), b(1, den);
  Rational r(a(rng), b(rng));
  r.canonicalize();
  return r;
}

}  // namespace testing
