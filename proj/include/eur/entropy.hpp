#pragma once

// Entropic quantities on multipartite density operators. All logarithms are
// base 2, so every value is in bits.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eur/linalg.hpp"

namespace eur {

using Subsystems = std::vector<std::size_t>;

inline constexpr double kStateTol = 1e-9;
/// Eigenvalues in [-kClampWindow, 0) are treated as zero by entropy routines.
inline constexpr double kClampWindow = 1e-10;
/// Outcomes below this probability are dropped from Holevo averages.
inline constexpr double kZeroProbability = 1e-12;

/// Unit-trace positive semidefinite operator on a tensor product of
/// subsystems with the given dimensions.
class DensityOperator {
 public:
  /// Validates Hermiticity, unit trace and positivity (all within kStateTol)
  /// and that the dims multiply to the matrix dimension.
  DensityOperator(CMatrix matrix, std::vector<std::size_t> dims);

  const CMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t subsystem_count() const noexcept { return dims_.size(); }

  /// Reduced state on `keep` (original order preserved).
  DensityOperator reduce(std::span<const std::size_t> keep) const;

 private:
  CMatrix matrix_;
  std::vector<std::size_t> dims_;
};

/// Orthonormal, complete, rank-one projective measurement on one subsystem.
class ProjectiveBasis {
 public:
  /// Throws ContractError unless the Gram matrix is the identity within 1e-10.
  ProjectiveBasis(std::string label, std::vector<CVector> vectors);

  const std::string& label() const noexcept { return label_; }
  const std::vector<CVector>& vectors() const noexcept { return vectors_; }
  std::size_t dim() const noexcept { return vectors_.size(); }

 private:
  std::string label_;
  std::vector<CVector> vectors_;
};

/// Outcome probabilities and the normalized states left on the unmeasured
/// subsystems. Outcomes with probability below kZeroProbability carry no
/// state.
struct MeasurementOutcomeEnsemble {
  std::vector<double> probabilities;
  std::vector<std::optional<DensityOperator>> conditional_states;
};

struct MeasurementResult {
  DensityOperator post_state;
  MeasurementOutcomeEnsemble ensemble;
};

/// -sum p log2 p with 0 log 0 = 0. Entries in [-1e-12, 0) count as zero;
/// anything more negative, or a total off 1 by more than 1e-9, throws
/// DomainError.
double shannon_entropy(std::span<const double> p);

/// Entropy of the eigenvalue spectrum of a Hermitian unit-trace matrix,
/// applying the clamp window. Throws PositivityError below it.
double matrix_entropy(const CMatrix& rho);

double von_neumann_entropy(const DensityOperator& rho);

/// S(a ∪ b) - S(b) after tracing out everything else.
double conditional_entropy(const DensityOperator& rho, const Subsystems& sub_a,
                           const Subsystems& sub_b);

/// S(a) + S(b) - S(a ∪ b).
double mutual_information(const DensityOperator& rho, const Subsystems& sub_a,
                          const Subsystems& sub_b);

/// Applies the dephasing channel sum_i (P_i ⊗ I) rho (P_i ⊗ I) on `target`.
MeasurementResult measure_subsystem(const DensityOperator& rho,
                                    const ProjectiveBasis& basis,
                                    std::size_t target);

/// Shannon entropy of the outcome distribution of `basis` on `target`.
double outcome_entropy(const DensityOperator& rho, const ProjectiveBasis& basis,
                       std::size_t target);

/// H(M|memory) = S(M, memory) - S(memory) on the post-measurement state.
double measured_conditional_entropy(const DensityOperator& rho,
                                    const ProjectiveBasis& basis,
                                    std::size_t target,
                                    const Subsystems& memory);

/// Holevo quantity S(rho_memory) - sum_i p_i S(rho_memory|i).
double holevo(const DensityOperator& rho, const ProjectiveBasis& basis,
              std::size_t target, const Subsystems& memory);

}  // namespace eur
