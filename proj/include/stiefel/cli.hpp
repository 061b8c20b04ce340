#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "stiefel/crosscap.hpp"
#include "stiefel/lambda_engine.hpp"

namespace stiefel::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kHypothesisFailure = 2,
  kInputError = 3,
  kUnsupportedDimension = 4,
  kRouteDisagreement = 5,
};

/// Malformed instance file or command-line value.
class InputError : public Error {
 public:
  using Error::Error;
};

enum class InstanceKind { frame, map };

/// A parsed instance file. Parity constraints are checked only when a spec is requested.
struct Instance {
  InstanceKind kind = InstanceKind::frame;
  Variables variables;
  Rational r2;
  int n = 0, k = 0;           // frame
  PolyMatrix columns;         // frame
  int m = 0;                  // map
  std::vector<Polynomial> components;  // map
  std::string hash;           // FNV-1a of the canonical instance JSON
};

Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::string& path);

/// Frame map of the instance (df for map instances), fully validated.
FrameMapSpec frame_spec(const Instance& inst);
SmoothMapSpec map_spec(const Instance& inst);
/// Matrix whose maximal minors cut out the degeneracy locus; no parity check.
PolyMatrix degeneracy_matrix(const Instance& inst);

std::string fnv1a_hex(std::string_view bytes);

enum class Format { json, text };

struct CommandOptions {
  std::optional<std::string> r2;
  std::string method = "all";
  std::uint64_t seed = 0;
  std::optional<std::string> delta;
  Format format = Format::json;
  bool certify = false;
  EngineOptions engine;
};

/// Seed from LAMBDA_SEED when set and numeric, else 0.
std::uint64_t default_seed();

/// Each runner writes the report to `out`, diagnostics to `err`, and returns the exit code.
int run_lambda(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_crosscaps(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_solve(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_algebra(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Report records; these are what the JSON documents are built from.
nlohmann::json to_json(const LambdaReport& report);
nlohmann::json to_json(const CrosscapReport& report);
nlohmann::json to_json(const SolutionPoint& point);

/// Numbers are rounded to 12 significant digits with -0 folded to 0.
double stable_double(double v);

}  // namespace stiefel::cli
