// eur: tripartite memory-assisted entropic uncertainty toolkit.
//
//   eur sweep     --family werner|wstate [--case 1|2] [--steps N] ...
//   eur bound     --state FILE --partition "B:x,y;C:z" [--measurements x,y,z]
//   eur verify    [--count N] [--seed S] [--dims 2,2,2] [--tol T]
//   eur constants [--measurements pauli-xyz|x,z|FILE] [--state FILE]

#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "eur/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Tripartite quantum-memory-assisted entropic uncertainty relations"};
  app.require_subcommand(1);

  const std::size_t threads = eur::threads_from_env();

  eur::SweepOptions sweep;
  sweep.threads = threads;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate U, L1, L2 along a state family");
  sweep_cmd->add_option("--family", sweep.family, "werner or wstate")
      ->check(CLI::IsMember({"werner", "wstate"}));
  double param_start = 0.0;
  double param_end = 0.0;
  auto* start_opt = sweep_cmd->add_option("--param-start", param_start, "First grid value");
  auto* end_opt = sweep_cmd->add_option("--param-end", param_end, "Last grid value");
  sweep_cmd->add_option("--steps", sweep.steps, "Grid points (inclusive)")->capture_default_str();
  sweep_cmd->add_option("--case", sweep.case_id, "1: x,y->B z->C; 2: x->B y,z->C")
      ->capture_default_str();
  sweep_cmd->add_option("--phi", sweep.phi, "Azimuth for the wstate family")
      ->capture_default_str();
  sweep_cmd->add_option("--output", sweep.output, "Output path, '-' for stdout");
  sweep_cmd->add_option("--format", sweep.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--tol", sweep.tol, "Inequality tolerance")->capture_default_str();

  eur::BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate every bound for a state file");
  bound_cmd->add_option("--state", bound.state, "State file (JSON)")->required();
  bound_cmd->add_option("--measurements", bound.measurements,
                        "pauli-xyz, comma list of x/y/z, or basis file")
      ->capture_default_str();
  bound_cmd->add_option("--partition", bound.partition, "e.g. \"B:x,y;C:z\"")->required();
  double external_lb = 0.0;
  auto* external_opt = bound_cmd->add_option(
      "--external-lb", external_lb, "Memory-free lower bound to convert (e.g. a majorization bound)");

  eur::VerifyOptions verify;
  verify.threads = threads;
  auto* verify_cmd = app.add_subcommand("verify", "Fuzz the inequality and identity suite");
  verify_cmd->add_option("--count", verify.count, "Random states")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Base seed")->capture_default_str();
  std::string dims = "2,2,2";
  verify_cmd->add_option("--dims", dims, "Subsystem dimensions")->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "Inequality tolerance")->capture_default_str();

  eur::ConstantsOptions constants;
  auto* constants_cmd = app.add_subcommand("constants", "Complementarity constants");
  constants_cmd->add_option("--measurements", constants.measurements,
                            "pauli-xyz, comma list of x/y/z, or basis file")
      ->capture_default_str();
  constants_cmd->add_option("--state", constants.state, "State file supplying rho_A");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? eur::kExitOk : eur::kExitUsage;
  }

  if (sweep_cmd->parsed()) {
    if (*start_opt) sweep.param_start = param_start;
    if (*end_opt) sweep.param_end = param_end;
    return eur::cmd_sweep(sweep, std::cout, std::cerr);
  }
  if (bound_cmd->parsed()) {
    if (*external_opt) bound.external_lb = external_lb;
    return eur::cmd_bound(bound, std::cout, std::cerr);
  }
  if (verify_cmd->parsed()) {
    try {
      verify.dims = eur::parse_dims(dims);
    } catch (const std::exception& e) {
      std::cerr << "eur verify: " << e.what() << '\n';
      return eur::kExitUsage;
    }
    return eur::cmd_verify(verify, std::cout, std::cerr);
  }
  return eur::cmd_constants(constants, std::cout, std::cerr);
}
