#include <CLI11.hpp>
#include <iostream>

#include "stiefel/cli.hpp"

using namespace stiefel::cli;

int main(int argc, char** argv) {
  CLI::App app{"Z2 frame-map invariant Lambda and cross-cap parity for polynomial maps"};
  app.require_subcommand(1);

  CommandOptions opts;
  opts.seed = default_seed();
  std::string path;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", path, "instance JSON file")->required();
    sub->add_option("--r2", opts.r2, "squared radius override, e.g. 7/2");
    sub->add_option("--seed", opts.seed, "seed for random functionals and solver draws (default: LAMBDA_SEED or 0)");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol-residual", opts.engine.solver.residual_tol, "relative residual acceptance threshold");
    sub->add_option("--tol-boundary", opts.engine.boundary_tol, "sphere distance tolerance, relative to r");
  };
  auto add_lambda_flags = [&](CLI::App* sub) {
    sub->add_option("--method", opts.method, "det, sig, numeric or all")
        ->check(CLI::IsMember({"det", "sig", "numeric", "all"}));
    sub->add_option("--delta", opts.delta, "polynomial delta for the signature route");
    sub->add_option("--retries", opts.engine.functional_retries, "extra random functionals when det[Psi] = 0");
  };

  auto* lambda = app.add_subcommand("lambda", "compute Lambda of a frame map on a sphere");
  add_common(lambda);
  add_lambda_flags(lambda);
  auto* crosscaps = app.add_subcommand("crosscaps", "cross-cap parity of a map R^m -> R^(2m-1) in a ball");
  add_common(crosscaps);
  add_lambda_flags(crosscaps);
  crosscaps->add_flag("--certify", opts.certify, "check that every singular point inside is a cross-cap");
  auto* solve = app.add_subcommand("solve", "real points of the degeneracy locus");
  add_common(solve);
  auto* algebra = app.add_subcommand("algebra", "dimension and basis of the quotient algebra");
  add_common(algebra);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  opts.format = format == "text" ? Format::text : Format::json;

  if (*lambda) return run_lambda(path, opts, std::cout, std::cerr);
  if (*crosscaps) return run_crosscaps(path, opts, std::cout, std::cerr);
  if (*solve) return run_solve(path, opts, std::cout, std::cerr);
  return run_algebra(path, opts, std::cout, std::cerr);
}
