#include "eur/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

namespace {

void require_disjoint(const Subsystems& a, const Subsystems& b,
                      std::size_t count) {
  for (std::size_t s : a) {
    if (s >= count) throw ContractError("subsystem index " + std::to_string(s) + " out of range");
    if (std::find(b.begin(), b.end(), s) != b.end()) {
      throw ContractError("subsystem sets overlap at index " + std::to_string(s));
    }
  }
  for (std::size_t s : b) {
    if (s >= count) throw ContractError("subsystem index " + std::to_string(s) + " out of range");
  }
}

Subsystems sorted_union(const Subsystems& a, const Subsystems& b) {
  Subsystems out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double reduced_entropy(const DensityOperator& rho, const Subsystems& keep) {
  if (keep.empty()) return 0.0;
  return matrix_entropy(partial_trace(rho.matrix(), rho.dims(), keep));
}

void require_measurable(const DensityOperator& rho, const ProjectiveBasis& basis,
                        std::size_t target) {
  if (target >= rho.subsystem_count()) {
    throw ContractError("measurement target " + std::to_string(target) + " out of range");
  }
  if (basis.dim() != rho.dims()[target]) {
    throw ContractError("basis '" + basis.label() + "' has dimension " +
                        std::to_string(basis.dim()) + " but subsystem " +
                        std::to_string(target) + " has dimension " +
                        std::to_string(rho.dims()[target]));
  }
}

void require_memory(const DensityOperator& rho, std::size_t target,
                    const Subsystems& memory) {
  require_disjoint({target}, memory, rho.subsystem_count());
}

// Unnormalized outcome blocks (P_i ⊗ I) rho (P_i ⊗ I).
std::vector<CMatrix> projected_blocks(const DensityOperator& rho,
                                      const ProjectiveBasis& basis,
                                      std::size_t target) {
  std::vector<CMatrix> blocks;
  blocks.reserve(basis.dim());
  for (const auto& u : basis.vectors()) {
    const CMatrix proj = embed(outer(u, u), rho.dims(), target);
    blocks.push_back(proj * rho.matrix() * proj);
  }
  return blocks;
}

CMatrix dephase(const DensityOperator& rho, const ProjectiveBasis& basis,
                std::size_t target) {
  CMatrix post(rho.matrix().dim());
  for (const auto& block : projected_blocks(rho, basis, target)) post += block;
  return post;
}

}  // namespace

DensityOperator::DensityOperator(CMatrix matrix, std::vector<std::size_t> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionError("DensityOperator: empty dims");
  for (std::size_t d : dims_) {
    if (d == 0) throw DimensionError("DensityOperator: zero subsystem dimension");
  }
  if (product(dims_) != matrix_.dim()) {
    throw DimensionError("DensityOperator: product of dims " +
                         std::to_string(product(dims_)) + " != matrix dim " +
                         std::to_string(matrix_.dim()));
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > kStateTol) {
    std::ostringstream msg;
    msg << "DensityOperator: not Hermitian (||rho - rho^dagger||_max = " << defect << ")";
    throw ContractError(msg.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0}) > kStateTol) {
    std::ostringstream msg;
    msg << "DensityOperator: trace " << tr.real() << " differs from 1";
    throw ContractError(msg.str());
  }
  const double min_eig = hermitian_eigenvalues(matrix_).front();
  if (min_eig < -kStateTol) {
    std::ostringstream msg;
    msg << "DensityOperator: not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw PositivityError(msg.str());
  }
}

DensityOperator DensityOperator::reduce(std::span<const std::size_t> keep) const {
  Subsystems sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> sub_dims;
  for (std::size_t s : sorted) {
    if (s >= dims_.size()) throw DimensionError("reduce: subsystem index out of range");
    sub_dims.push_back(dims_[s]);
  }
  return DensityOperator(partial_trace(matrix_, dims_, sorted), std::move(sub_dims));
}

ProjectiveBasis::ProjectiveBasis(std::string label, std::vector<CVector> vectors)
    : label_(std::move(label)), vectors_(std::move(vectors)) {
  const std::size_t d = vectors_.size();
  if (d == 0) throw ContractError("basis '" + label_ + "' is empty");
  for (const auto& v : vectors_) {
    if (v.size() != d) {
      throw ContractError("basis '" + label_ + "' is not complete: " +
                          std::to_string(d) + " vectors of length " +
                          std::to_string(v.size()));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Complex g = inner(vectors_[i], vectors_[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > 1e-10) {
        std::ostringstream msg;
        msg << "basis '" << label_ << "' is not orthonormal: <" << i << "|" << j
            << "> = " << g.real() << (g.imag() < 0 ? "" : "+") << g.imag() << "i";
        throw ContractError(msg.str());
      }
    }
  }
}

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  double h = 0.0;
  for (double x : p) {
    if (!(x >= -1e-12)) {
      std::ostringstream msg;
      msg << "shannon_entropy: negative probability " << x;
      throw DomainError(msg.str());
    }
    if (x <= 0.0) continue;
    total += x;
    h -= x * std::log2(x);
  }
  if (std::abs(total - 1.0) > kStateTol) {
    std::ostringstream msg;
    msg << "shannon_entropy: probabilities sum to " << total;
    throw DomainError(msg.str());
  }
  return std::max(h, 0.0);
}

double matrix_entropy(const CMatrix& rho) {
  auto values = hermitian_eigenvalues(rho);
  for (double& v : values) {
    if (v < -kClampWindow) {
      std::ostringstream msg;
      msg << "entropy: eigenvalue " << v << " below clamp window";
      throw PositivityError(msg.str());
    }
    if (v < 0.0) v = 0.0;
  }
  return shannon_entropy(values);
}

double von_neumann_entropy(const DensityOperator& rho) {
  return matrix_entropy(rho.matrix());
}

double conditional_entropy(const DensityOperator& rho, const Subsystems& sub_a,
                           const Subsystems& sub_b) {
  require_disjoint(sub_a, sub_b, rho.subsystem_count());
  return reduced_entropy(rho, sorted_union(sub_a, sub_b)) - reduced_entropy(rho, sub_b);
}

double mutual_information(const DensityOperator& rho, const Subsystems& sub_a,
                          const Subsystems& sub_b) {
  require_disjoint(sub_a, sub_b, rho.subsystem_count());
  return reduced_entropy(rho, sub_a) + reduced_entropy(rho, sub_b) -
         reduced_entropy(rho, sorted_union(sub_a, sub_b));
}

MeasurementResult measure_subsystem(const DensityOperator& rho,
                                    const ProjectiveBasis& basis,
                                    std::size_t target) {
  require_measurable(rho, basis, target);
  const auto blocks = projected_blocks(rho, basis, target);

  Subsystems rest;
  std::vector<std::size_t> rest_dims;
  for (std::size_t s = 0; s < rho.subsystem_count(); ++s) {
    if (s == target) continue;
    rest.push_back(s);
    rest_dims.push_back(rho.dims()[s]);
  }

  CMatrix post(rho.matrix().dim());
  MeasurementOutcomeEnsemble ensemble;
  for (const auto& block : blocks) {
    post += block;
    const double p = std::max(block.trace().real(), 0.0);
    ensemble.probabilities.push_back(p);
    if (p < kZeroProbability || rest.empty()) {
      ensemble.conditional_states.emplace_back(std::nullopt);
      continue;
    }
    CMatrix cond = partial_trace(block, rho.dims(), rest);
    cond = 0.5 / p * (cond + cond.adjoint());
    ensemble.conditional_states.emplace_back(DensityOperator(std::move(cond), rest_dims));
  }
  return {DensityOperator(std::move(post), rho.dims()), std::move(ensemble)};
}

double outcome_entropy(const DensityOperator& rho, const ProjectiveBasis& basis,
                       std::size_t target) {
  require_measurable(rho, basis, target);
  const CMatrix reduced = partial_trace(rho.matrix(), rho.dims(), Subsystems{target});
  std::vector<double> p;
  for (const auto& u : basis.vectors()) {
    p.push_back(std::max(inner(u, reduced * u).real(), 0.0));
  }
  return shannon_entropy(p);
}

double measured_conditional_entropy(const DensityOperator& rho,
                                    const ProjectiveBasis& basis,
                                    std::size_t target,
                                    const Subsystems& memory) {
  require_measurable(rho, basis, target);
  require_memory(rho, target, memory);
  const CMatrix post = dephase(rho, basis, target);
  const double h =
      matrix_entropy(partial_trace(post, rho.dims(), sorted_union({target}, memory))) -
      reduced_entropy(rho, memory);
  // The measured register is classical, so H(M|memory) >= 0 up to roundoff.
  return std::max(h, 0.0);
}

double holevo(const DensityOperator& rho, const ProjectiveBasis& basis,
              std::size_t target, const Subsystems& memory) {
  require_measurable(rho, basis, target);
  require_memory(rho, target, memory);
  if (memory.empty()) return 0.0;

  // p_i S(tau_i / p_i) = -sum_k l_k log2 l_k + p_i log2 p_i for the
  // unnormalized memory block tau_i with eigenvalues l_k, which avoids
  // amplifying roundoff by 1/p_i.
  Subsystems sorted_memory = memory;
  std::sort(sorted_memory.begin(), sorted_memory.end());
  double average = 0.0;
  for (const auto& block : projected_blocks(rho, basis, target)) {
    const double p = block.trace().real();
    if (p < kZeroProbability) continue;
    const CMatrix tau = partial_trace(block, rho.dims(), sorted_memory);
    double unnormalized = 0.0;
    for (double l : hermitian_eigenvalues(tau)) {
      if (l < -kClampWindow) {
        std::ostringstream msg;
        msg << "holevo: conditional eigenvalue " << l << " below clamp window";
        throw PositivityError(msg.str());
      }
      if (l > 0.0) unnormalized -= l * std::log2(l);
    }
    average += unnormalized + p * std::log2(p);
  }
  return reduced_entropy(rho, memory) - average;
}

}  // namespace eur
