#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stiefel/lambda_engine.hpp"

namespace stiefel {

/// A polynomial map f: R^m -> R^{2m-1}, m even, restricted to the closed ball of radius sqrt(r2).
struct SmoothMapSpec {
  int m = 0;
  Variables variables;                 // m names
  std::vector<Polynomial> components;  // 2m - 1 polynomials
  Rational r2;

  /// InvalidSpec for shape errors, UnsupportedDimension for odd m.
  void validate() const;
};

SmoothMapSpec make_map_spec(int m, Variables vars, std::vector<Polynomial> components, Rational r2);

/// df as a (2m-1) x m frame map; column i holds the partials with respect to x_i.
FrameMapSpec jacobian_frame(const SmoothMapSpec& f);

enum class CrosscapVerdict { certified, refuted, unknown };

std::string to_string(CrosscapVerdict verdict);

struct CrosscapReport {
  std::optional<int> parity;
  std::optional<std::size_t> singular_points_inside;
  std::optional<CrosscapVerdict> all_crosscaps;
  LambdaReport lambda;
};

/// Parity of the number of cross-caps in the ball, as Lambda of df on the sphere.
/// Lambda failures propagate as LambdaFailure.
CrosscapReport crosscap_parity(const SmoothMapSpec& f, const std::set<Method>& methods, std::uint64_t seed = 0,
                               const std::optional<Polynomial>& delta = std::nullopt,
                               const EngineOptions& options = {}, bool certify = false);

/// Whether every singular point inside the ball is a cross-cap: a regular zero of the
/// normalized df system with rank df = m - 1. Never throws on numeric trouble.
CrosscapVerdict certify_crosscaps_only(const SmoothMapSpec& f, const EngineOptions& options = {},
                                       std::uint64_t seed = 0);

/// Distinct real singular points strictly inside the ball.
std::size_t count_singular_points(const SmoothMapSpec& f, const EngineOptions& options = {}, std::uint64_t seed = 0);

}  // namespace stiefel
