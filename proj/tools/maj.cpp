// maj: majorization-based entropic uncertainty bounds for quantum operations.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "majunc/commands.hpp"

namespace cli = majunc::cli;

int main(int argc, char** argv) {
  CLI::App app{"Majorization uncertainty bounds for pairs of quantum operations"};
  app.require_subcommand(1);

  std::string validate_path;
  double validate_tol = majunc::kTpcpTolerance;
  auto* validate = app.add_subcommand("validate", "Check that a channel file is trace preserving");
  validate->add_option("file", validate_path, "Channel JSON file")->required();
  validate->add_option("--tol", validate_tol, "Entrywise tolerance");

  cli::BoundsOptions bounds_opts;
  std::string family = "renyi";
  std::string base = "2";
  auto* bounds = app.add_subcommand("bounds", "Entropic lower bounds for a channel pair");
  bounds->add_option("--a", bounds_opts.a_path, "First channel")->required();
  bounds->add_option("--b", bounds_opts.b_path, "Second channel")->required();
  bounds->add_option("--alpha", bounds_opts.alpha, "Entropy order")->required();
  bounds->add_option("--family", family, "renyi or tsallis")
      ->check(CLI::IsMember({"renyi", "tsallis"}));
  bounds->add_option("--base", base, "Log base: 2 or e")->check(CLI::IsMember({"2", "e"}));
  bounds->add_flag("--json", bounds_opts.json, "Emit a JSON report");
  bounds->add_option("--tol", bounds_opts.tpcp_tolerance, "Trace-preservation tolerance");

  cli::CurveOptions curve_opts;
  std::string angle_text;
  auto* curve = app.add_subcommand("curve", "Qubit bound curves against the Bloch length");
  curve->add_option("--angle", angle_text, "Angle between Bloch vectors (radians, or pi/N)")
      ->required();
  curve->add_option("--alpha", curve_opts.alpha, "Entropy order")->required();
  curve->add_option("--grid", curve_opts.grid, "Number of grid points");
  curve->add_option("--out", curve_opts.out_path, "Output CSV path")->required();

  cli::VerifyOptions verify_opts;
  std::string verify_b;
  auto* verify = app.add_subcommand("verify", "Check every relation on random input states");
  verify->add_option("--a", verify_opts.a_path, "First channel")->required();
  verify->add_option("--b", verify_b, "Second channel (omit for single-operation mode)");
  verify->add_option("--samples", verify_opts.samples, "Number of random states");
  verify->add_option("--seed", verify_opts.seed, "Random seed");
  verify->add_option("--tol", verify_opts.tpcp_tolerance, "Trace-preservation tolerance");

  cli::EquivalenceOptions eq_opts;
  std::size_t eq_dim = 0;
  std::string eq_unitary;
  auto* equivalence =
      app.add_subcommand("equivalence", "Compare block and unitary norm sequences for two bases");
  auto* mode = equivalence->add_option_group("mode", "Source of the two bases");
  auto* dim_opt = mode->add_option("--dim", eq_dim, "Dimension of the random bases");
  auto* unitary_opt = mode->add_option("--unitary", eq_unitary, "Unitary overlap matrix JSON file");
  mode->require_option(1);
  equivalence->add_option("--seed", eq_opts.seed, "Random seed")->needs(dim_opt);

  cli::SingleOptions single_opts;
  auto* single = app.add_subcommand("single", "Majorization bound for a single operation");
  single->add_option("--a", single_opts.a_path, "Channel")->required();
  single->add_option("--alpha", single_opts.alpha, "Entropy order");
  single->add_option("--tol", single_opts.tpcp_tolerance, "Trace-preservation tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      return cli::cmd_validate(validate_path, std::cout, std::cerr, validate_tol);
    }
    if (bounds->parsed()) {
      bounds_opts.family =
          family == "renyi" ? majunc::EntropyFamily::Renyi : majunc::EntropyFamily::Tsallis;
      bounds_opts.base = base == "2" ? majunc::LogBase::Two : majunc::LogBase::Natural;
      return cli::cmd_bounds(bounds_opts, std::cout, std::cerr);
    }
    if (curve->parsed()) {
      curve_opts.angle = cli::parse_angle(angle_text);
      return cli::cmd_curve(curve_opts, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      if (!verify_b.empty()) {
        verify_opts.b_path = verify_b;
      }
      return cli::cmd_verify(verify_opts, std::cout, std::cerr);
    }
    if (equivalence->parsed()) {
      if (dim_opt->count() > 0) {
        eq_opts.dim = eq_dim;
      }
      if (unitary_opt->count() > 0) {
        eq_opts.unitary_path = eq_unitary;
      }
      return cli::cmd_equivalence(eq_opts, std::cout, std::cerr);
    }
    if (single->parsed()) {
      return cli::cmd_single(single_opts, std::cout, std::cerr);
    }
  } catch (const majunc::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kDomainViolation;
  }
  return 1;
}
