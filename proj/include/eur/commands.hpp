#pragma once

// Subcommands of the `eur` tool. Each returns the process exit code and
// writes only to the streams it is given, so tests can drive them directly.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "eur/io.hpp"

namespace eur {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitViolation = 2,
  kExitIo = 3,
};

inline constexpr double kDefaultIdentityTol = 1e-9;
inline constexpr double kDefaultInequalityTol = 1e-8;

/// Worker count from EUR_THREADS; 1 when unset or unparsable.
std::size_t threads_from_env();

struct SweepOptions {
  std::string family = "werner";  // werner | wstate
  std::optional<double> param_start;
  std::optional<double> param_end;
  std::size_t steps = 101;
  int case_id = 1;
  double phi = std::numbers::pi / 4.0;
  std::string output = "-";
  std::string format = "csv";  // csv | json
  double tol = kDefaultInequalityTol;
  std::size_t threads = 1;
};

/// Evaluates one grid point of a family under case 1 or case 2.
SweepRow sweep_row(const std::string& family, double param, int case_id, double phi);

/// Case 1: x, y guessed by B, z by C. Case 2: x by B, y, z by C.
MeasurementScenario pauli_case_scenario(int case_id);

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

struct BoundOptions {
  std::string state;
  std::string measurements = "x,y,z";
  std::string partition;
  std::optional<double> external_lb;
};

std::string bound_report_json(const BoundReport& report);

int cmd_bound(const BoundOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::vector<std::size_t> dims{2, 2, 2};
  double tol = kDefaultInequalityTol;
  /// Items (from index 0) that also get a random basis triple.
  std::size_t random_triples = 200;
  std::size_t threads = 1;
};

struct VerifyFailure {
  std::size_t index;
  std::string check;
  double margin;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;          // smallest lhs - rhs over inequality checks
  double worst_identity_error = 0.0;  // largest |lhs - rhs| over identities
  std::uint64_t seed = 0;
  std::vector<VerifyFailure> failures;  // first few, for replay
  /// Violation counts keyed by check name with the scenario tag removed.
  std::map<std::string, std::size_t> violations_by_check;
};

VerifyReport run_verify(const VerifyOptions& opts);
std::string verify_report_json(const VerifyReport& report, const VerifyOptions& opts);

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct ConstantsOptions {
  std::string measurements = "pauli-xyz";
  std::string state;  // optional; rho_A is I/d when empty
};

int cmd_constants(const ConstantsOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace eur
