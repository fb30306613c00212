#pragma once

// Complementarity constants and tripartite memory-assisted lower bounds for
// N projective measurements on subsystem A (index 0) of a state on A B C,
// with the first `split` measurements guessed by B (index 1) and the rest
// by C (index 2).

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eur/entropy.hpp"

namespace eur {

inline constexpr std::size_t kSubsystemA = 0;
inline constexpr std::size_t kMemoryB = 1;
inline constexpr std::size_t kMemoryC = 2;

/// Upper limit on N for the permutation search behind zhang_bound.
inline constexpr std::size_t kMaxZhangMeasurements = 5;

/// Tolerance used to record whether an inequality holds.
inline constexpr double kInequalityTol = 1e-8;

class MeasurementScenario {
 public:
  /// Throws ContractError if `bases` is empty, `split` > N, or the bases do
  /// not share one dimension.
  MeasurementScenario(std::vector<ProjectiveBasis> bases, std::size_t split);

  const std::vector<ProjectiveBasis>& bases() const noexcept { return bases_; }
  std::size_t size() const noexcept { return bases_.size(); }
  std::size_t split() const noexcept { return split_; }
  std::size_t dim() const noexcept { return bases_.front().dim(); }

  /// Memory subsystem that guesses measurement `m` (kMemoryB or kMemoryC).
  std::size_t memory_of(std::size_t m) const noexcept {
    return m < split_ ? kMemoryB : kMemoryC;
  }

 private:
  std::vector<ProjectiveBasis> bases_;
  std::size_t split_;
};

/// |<u_i|v_j>|^2 for vector i of `u` and vector j of `v`.
double overlap(const ProjectiveBasis& u, std::size_t i, const ProjectiveBasis& v,
               std::size_t j);

struct OverlapConstant {
  double c;     // max_ij |<x_i|z_j>|^2
  double q_mu;  // -log2 c
};

OverlapConstant mu_constant(const ProjectiveBasis& x, const ProjectiveBasis& z);

struct LiuConstant {
  double b;
  double neg_log_b;
};

/// Path weights w(i_N) = sum over i_2..i_{N-1} of
/// max_{i_1} |<u1_{i_1}|u2_{i_2}>|^2 * prod_{m>=2} |<um_{i_m}|u(m+1)_{i_(m+1)}>|^2,
/// one per outcome of the last basis, enumerated exhaustively.
std::vector<double> path_weights(std::span<const ProjectiveBasis> bases);

/// b = max_{i_N} w(i_N) for the bases in the given order. Requires N >= 2.
LiuConstant liu_constant(std::span<const ProjectiveBasis> bases);

struct OrderingValue {
  std::vector<std::size_t> order;  // indices into the input basis list
  double value;
};

/// The state-dependent constant -sum_{i_N} p(i_N) log2 w(i_N) for every
/// ordering of the bases, where p is the distribution of the last basis on
/// rho_a. Orderings are listed lexicographically. Requires 2 <= N <= 5.
std::vector<OrderingValue> zhang_orderings(std::span<const ProjectiveBasis> bases,
                                           const DensityOperator& rho_a);

/// Maximum of zhang_orderings.
double zhang_bound(std::span<const ProjectiveBasis> bases,
                   const DensityOperator& rho_a);

/// Whole-state entropic terms shared by every bound.
struct CorrelationTerms {
  double entropy_A;
  double cond_A_given_B;
  double cond_A_given_C;
  double mutual_A_B;
  double mutual_A_C;
};

CorrelationTerms correlation_terms(const DensityOperator& rho);

struct MeasurementTerm {
  std::string label;
  std::size_t memory;
  double outcome_entropy;      // H(M)
  double conditional_entropy;  // H(M|memory)
  double holevo;               // I(M:memory)
};

std::vector<MeasurementTerm> measurement_terms(const DensityOperator& rho,
                                               const MeasurementScenario& scenario);

/// Sum of the Holevo quantities of every measurement with its memory.
double holevo_sum(const DensityOperator& rho, const MeasurementScenario& scenario);

/// Sum of H(M_m|memory) over the scenario.
double uncertainty(const DensityOperator& rho, const MeasurementScenario& scenario);

struct TripartiteBound {
  double bound;
  double delta;     // before clamping at zero
  double constant;  // complementarity term used
  CorrelationTerms terms;
  double holevo_sum;
};

/// constant + (N-1)/2 [S(A|B)+S(A|C)] + max{0, delta} with
/// delta = (N-1)/2 [I(A:B)+I(A:C)] - holevo_sum and constant = -log2 b.
TripartiteBound theorem1_bound(const DensityOperator& rho,
                               const MeasurementScenario& scenario);

/// As theorem1_bound with the maximized ordering constant of zhang_bound.
TripartiteBound corollary1_bound(const DensityOperator& rho,
                                 const MeasurementScenario& scenario);

/// Converts a memory-free bound sum_m H(M_m) >= lb into lb - holevo_sum.
double generic_tripartite_bound(double lb, const DensityOperator& rho,
                                const MeasurementScenario& scenario);

struct ColesBound {
  double bound;
  double delta_prime;  // before clamping at zero
};

/// Name of the first pair of bases in a qubit triple that is not mutually
/// unbiased within 1e-9, or nullopt when all three pairs are.
std::optional<std::string> non_mub_pair(const MeasurementScenario& scenario);

/// Memory-assisted form of the three-MUB qubit relation
/// H(x)+H(y)+H(z) >= 2 + S(A): 1 + [S(A|B)+S(A|C)]/2 + max{0, delta'} with
/// delta' = 1 + [I(A:B)+I(A:C)]/2 - holevo_sum. Requires a qubit A and three
/// pairwise unbiased bases.
ColesBound coles_tripartite_bound(const DensityOperator& rho,
                                  const MeasurementScenario& scenario);

/// q_MU + S(A|memory), both measurements guessed by the same memory.
double berta_bound(const DensityOperator& rho, const ProjectiveBasis& x,
                   const ProjectiveBasis& z, std::size_t memory);

/// q_MU for X guessed by B and Z guessed by C.
double tripartite_mu_bound(const ProjectiveBasis& x, const ProjectiveBasis& z);

/// q_MU + [S(A|B)+S(A|C)]/2 + max{0, delta} for N = 2, split = 1.
/// Not a valid lower bound for every mixed state: with delta < 0 the clamped
/// value can exceed H(X|B)+H(Z|C). The unclamped form always holds.
TripartiteBound dolat_two_measurement_bound(const DensityOperator& rho,
                                            const MeasurementScenario& scenario);

struct NamedValue {
  std::string name;
  double value;
};

struct BoundReport {
  double uncertainty_U = 0.0;
  double theorem1_bound = 0.0;       // L1
  std::optional<double> coles_bound;  // L2, qubit three-MUB scenarios only
  std::vector<NamedValue> generic_bounds;
  double delta = 0.0;                 // kappa / eta, before clamping
  std::optional<double> delta_prime;  // kappa' / eta', before clamping
  std::vector<NamedValue> complementarity;
  CorrelationTerms entropy_terms{};
  std::vector<MeasurementTerm> measurements;
  double holevo_sum = 0.0;
  double slack = 0.0;  // U minus the largest bound in the report
  double slack_L1 = 0.0;
  std::optional<double> slack_L2;
  bool holds_L1 = true;
  std::optional<bool> holds_L2;
};

/// Full evaluation of one state under one scenario.
BoundReport case_quantities(const DensityOperator& rho,
                            const MeasurementScenario& scenario);

}  // namespace eur
