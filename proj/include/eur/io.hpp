#pragma once

// File formats and option-string parsing shared by the command line tools.
//
// State file (JSON):
//   {"dims": [2, 2, 2], "matrix": [[[re, im], ...], ...]}   row-major
// Basis file (JSON):
//   {"bases": [{"label": "x", "vectors": [[[re, im], ...], ...]}, ...]}
// Partition string:
//   "B:x,y;C:z"  memory clauses separated by ';', labels by ','

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/error.hpp"

namespace eur {

/// Malformed user input (bad JSON shape, unknown label, bad partition token).
class ParseError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

DensityOperator parse_state_json(std::string_view text);
DensityOperator read_state_file(const std::filesystem::path& path);
std::string state_to_json(const DensityOperator& rho);
void write_state_file(const std::filesystem::path& path, const DensityOperator& rho);

std::vector<ProjectiveBasis> parse_bases_json(std::string_view text);

/// Resolves a measurement list: "pauli-xyz" style names, a comma list of
/// Pauli labels ("x,z"), or the path of a basis file.
std::vector<ProjectiveBasis> resolve_measurements(const std::string& text);

/// Builds the scenario for a partition string. Every measurement label must be
/// used exactly once; B clauses come first in the resulting basis order.
MeasurementScenario parse_partition(const std::string& text,
                                    const std::vector<ProjectiveBasis>& measurements);

/// Parses "2,2,2".
std::vector<std::size_t> parse_dims(const std::string& text);

/// Shortest round-trip decimal form; negative zero prints as "0".
std::string format_real(double value);

inline constexpr std::string_view kSweepCsvHeader =
    "param,U,L1,L2,delta,delta_prime,S_AB,S_AC,I_AB,I_AC,holevo_sum,slack_L1,slack_L2";

struct SweepRow {
  double param;
  double U;
  double L1;
  double L2;
  double delta;
  double delta_prime;
  double S_AB;  // S(A|B)
  double S_AC;  // S(A|C)
  double I_AB;
  double I_AC;
  double holevo_sum;
  double slack_L1;
  double slack_L2;
};

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace eur
