#include "eur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

namespace {

void require_tripartite(const DensityOperator& rho,
                        const MeasurementScenario& scenario) {
  if (rho.subsystem_count() != 3) {
    throw ContractError("expected a tripartite state, got " +
                        std::to_string(rho.subsystem_count()) + " subsystems");
  }
  if (rho.dims()[kSubsystemA] != scenario.dim()) {
    throw ContractError("scenario bases have dimension " +
                        std::to_string(scenario.dim()) + " but subsystem A has " +
                        std::to_string(rho.dims()[kSubsystemA]));
  }
}

void require_same_dim(std::span<const ProjectiveBasis> bases) {
  for (const auto& b : bases) {
    if (b.dim() != bases.front().dim()) {
      throw ContractError("bases '" + bases.front().label() + "' and '" + b.label() +
                          "' act on different dimensions");
    }
  }
}

TripartiteBound assemble(double constant, std::size_t n, const CorrelationTerms& t,
                         double holevo_total) {
  const double weight = static_cast<double>(n - 1) / 2.0;
  const double delta = weight * (t.mutual_A_B + t.mutual_A_C) - holevo_total;
  const double bound = constant + weight * (t.cond_A_given_B + t.cond_A_given_C) +
                       std::max(0.0, delta);
  return {bound, delta, constant, t, holevo_total};
}

ColesBound assemble_coles(const CorrelationTerms& t, double holevo_total) {
  const double delta_prime = 1.0 + 0.5 * (t.mutual_A_B + t.mutual_A_C) - holevo_total;
  const double bound =
      1.0 + 0.5 * (t.cond_A_given_B + t.cond_A_given_C) + std::max(0.0, delta_prime);
  return {bound, delta_prime};
}

double sum_holevo(const std::vector<MeasurementTerm>& terms) {
  double s = 0.0;
  for (const auto& t : terms) s += t.holevo;
  return s;
}

}  // namespace

MeasurementScenario::MeasurementScenario(std::vector<ProjectiveBasis> bases,
                                         std::size_t split)
    : bases_(std::move(bases)), split_(split) {
  if (bases_.empty()) throw ContractError("scenario needs at least one basis");
  if (split_ > bases_.size()) {
    throw ContractError("split " + std::to_string(split_) + " exceeds N = " +
                        std::to_string(bases_.size()));
  }
  require_same_dim(bases_);
}

double overlap(const ProjectiveBasis& u, std::size_t i, const ProjectiveBasis& v,
               std::size_t j) {
  return std::norm(inner(u.vectors()[i], v.vectors()[j]));
}

OverlapConstant mu_constant(const ProjectiveBasis& x, const ProjectiveBasis& z) {
  if (x.dim() != z.dim()) {
    throw DimensionError("mu_constant: bases '" + x.label() + "' and '" + z.label() +
                         "' differ in dimension");
  }
  double c = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < z.dim(); ++j) c = std::max(c, overlap(x, i, z, j));
  }
  return {c, -std::log2(c)};
}

std::vector<double> path_weights(std::span<const ProjectiveBasis> bases) {
  const std::size_t n = bases.size();
  if (n < 2) throw ContractError("complementarity constant needs N >= 2 bases");
  require_same_dim(bases);
  const std::size_t d = bases.front().dim();

  // first_hop[i2] = max_{i1} |<u1_{i1}|u2_{i2}>|^2
  std::vector<double> first_hop(d, 0.0);
  for (std::size_t i2 = 0; i2 < d; ++i2) {
    for (std::size_t i1 = 0; i1 < d; ++i1) {
      first_hop[i2] = std::max(first_hop[i2], overlap(bases[0], i1, bases[1], i2));
    }
  }

  std::vector<double> weights(d, 0.0);
  if (n == 2) return first_hop;

  // Odometer over the interior indices i_2 .. i_{N-1}.
  const std::size_t interior = n - 2;
  std::vector<std::size_t> idx(interior, 0);
  for (std::size_t last = 0; last < d; ++last) {
    std::fill(idx.begin(), idx.end(), 0);
    double total = 0.0;
    while (true) {
      double term = first_hop[idx[0]];
      for (std::size_t m = 1; m < interior && term != 0.0; ++m) {
        term *= overlap(bases[m], idx[m - 1], bases[m + 1], idx[m]);
      }
      term *= overlap(bases[n - 2], idx[interior - 1], bases[n - 1], last);
      total += term;

      std::size_t k = interior;
      while (k > 0 && ++idx[k - 1] == d) idx[--k] = 0;
      if (k == 0) break;
    }
    weights[last] = total;
  }
  return weights;
}

LiuConstant liu_constant(std::span<const ProjectiveBasis> bases) {
  const auto w = path_weights(bases);
  const double b = *std::max_element(w.begin(), w.end());
  return {b, -std::log2(b)};
}

std::vector<OrderingValue> zhang_orderings(std::span<const ProjectiveBasis> bases,
                                           const DensityOperator& rho_a) {
  const std::size_t n = bases.size();
  if (n < 2) throw ContractError("zhang_bound needs N >= 2 bases");
  if (n > kMaxZhangMeasurements) {
    throw ContractError("zhang_bound: N = " + std::to_string(n) +
                        " exceeds the permutation search limit of " +
                        std::to_string(kMaxZhangMeasurements));
  }
  if (rho_a.subsystem_count() != 1 || rho_a.dims()[0] != bases.front().dim()) {
    throw ContractError("zhang_bound: rho_a must be a single subsystem of the basis dimension");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<OrderingValue> out;
  do {
    std::vector<ProjectiveBasis> permuted;
    permuted.reserve(n);
    for (std::size_t k : order) permuted.push_back(bases[k]);
    const auto w = path_weights(permuted);
    const auto& last = permuted.back();
    double value = 0.0;
    for (std::size_t i = 0; i < last.dim(); ++i) {
      const CVector& u = last.vectors()[i];
      const double p = inner(u, rho_a.matrix() * u).real();
      if (p > 0.0) value -= p * std::log2(w[i]);
    }
    out.push_back({order, value});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

double zhang_bound(std::span<const ProjectiveBasis> bases,
                   const DensityOperator& rho_a) {
  const auto values = zhang_orderings(bases, rho_a);
  return std::max_element(values.begin(), values.end(),
                          [](const auto& a, const auto& b) { return a.value < b.value; })
      ->value;
}

CorrelationTerms correlation_terms(const DensityOperator& rho) {
  if (rho.subsystem_count() != 3) {
    throw ContractError("correlation_terms: expected a tripartite state");
  }
  const Subsystems a{kSubsystemA};
  const Subsystems b{kMemoryB};
  const Subsystems c{kMemoryC};
  return {von_neumann_entropy(rho.reduce(a)), conditional_entropy(rho, a, b),
          conditional_entropy(rho, a, c), mutual_information(rho, a, b),
          mutual_information(rho, a, c)};
}

std::vector<MeasurementTerm> measurement_terms(const DensityOperator& rho,
                                               const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  std::vector<MeasurementTerm> out;
  out.reserve(scenario.size());
  for (std::size_t m = 0; m < scenario.size(); ++m) {
    const auto& basis = scenario.bases()[m];
    const std::size_t memory = scenario.memory_of(m);
    out.push_back({basis.label(), memory, outcome_entropy(rho, basis, kSubsystemA),
                   measured_conditional_entropy(rho, basis, kSubsystemA, {memory}),
                   holevo(rho, basis, kSubsystemA, {memory})});
  }
  return out;
}

double holevo_sum(const DensityOperator& rho, const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  double s = 0.0;
  for (std::size_t m = 0; m < scenario.size(); ++m) {
    s += holevo(rho, scenario.bases()[m], kSubsystemA, {scenario.memory_of(m)});
  }
  return s;
}

double uncertainty(const DensityOperator& rho, const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  double s = 0.0;
  for (std::size_t m = 0; m < scenario.size(); ++m) {
    s += measured_conditional_entropy(rho, scenario.bases()[m], kSubsystemA,
                                      {scenario.memory_of(m)});
  }
  return s;
}

TripartiteBound theorem1_bound(const DensityOperator& rho,
                               const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  const double constant = liu_constant(scenario.bases()).neg_log_b;
  return assemble(constant, scenario.size(), correlation_terms(rho),
                  holevo_sum(rho, scenario));
}

TripartiteBound corollary1_bound(const DensityOperator& rho,
                                 const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  const double constant = zhang_bound(scenario.bases(), rho.reduce(Subsystems{kSubsystemA}));
  return assemble(constant, scenario.size(), correlation_terms(rho),
                  holevo_sum(rho, scenario));
}

double generic_tripartite_bound(double lb, const DensityOperator& rho,
                                const MeasurementScenario& scenario) {
  if (!std::isfinite(lb)) throw ContractError("generic_tripartite_bound: lb is not finite");
  return lb - holevo_sum(rho, scenario);
}

std::optional<std::string> non_mub_pair(const MeasurementScenario& scenario) {
  const auto& bases = scenario.bases();
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      const double target = 1.0 / static_cast<double>(bases[a].dim());
      for (std::size_t i = 0; i < bases[a].dim(); ++i) {
        for (std::size_t j = 0; j < bases[b].dim(); ++j) {
          if (std::abs(overlap(bases[a], i, bases[b], j) - target) > 1e-9) {
            return bases[a].label() + "," + bases[b].label();
          }
        }
      }
    }
  }
  return std::nullopt;
}

ColesBound coles_tripartite_bound(const DensityOperator& rho,
                                  const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  if (rho.dims() != std::vector<std::size_t>{2, 2, 2}) {
    throw ContractError("coles_tripartite_bound: requires three qubits");
  }
  if (scenario.size() != 3) {
    throw ContractError("coles_tripartite_bound: requires exactly three bases");
  }
  if (auto pair = non_mub_pair(scenario)) {
    throw ContractError("coles_tripartite_bound: bases " + *pair +
                        " are not mutually unbiased");
  }
  return assemble_coles(correlation_terms(rho), holevo_sum(rho, scenario));
}

double berta_bound(const DensityOperator& rho, const ProjectiveBasis& x,
                   const ProjectiveBasis& z, std::size_t memory) {
  return mu_constant(x, z).q_mu +
         conditional_entropy(rho, Subsystems{kSubsystemA}, Subsystems{memory});
}

double tripartite_mu_bound(const ProjectiveBasis& x, const ProjectiveBasis& z) {
  return mu_constant(x, z).q_mu;
}

TripartiteBound dolat_two_measurement_bound(const DensityOperator& rho,
                                            const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  if (scenario.size() != 2 || scenario.split() != 1) {
    throw ContractError("dolat_two_measurement_bound: requires N = 2 with split 1");
  }
  const double q = mu_constant(scenario.bases()[0], scenario.bases()[1]).q_mu;
  return assemble(q, 2, correlation_terms(rho), holevo_sum(rho, scenario));
}

BoundReport case_quantities(const DensityOperator& rho,
                            const MeasurementScenario& scenario) {
  require_tripartite(rho, scenario);
  const std::size_t n = scenario.size();
  if (n < 2) throw ContractError("case_quantities: needs N >= 2 bases");

  BoundReport r;
  r.entropy_terms = correlation_terms(rho);
  r.measurements = measurement_terms(rho, scenario);
  r.holevo_sum = sum_holevo(r.measurements);
  for (const auto& m : r.measurements) r.uncertainty_U += m.conditional_entropy;

  const auto& bases = scenario.bases();
  const auto liu = liu_constant(bases);
  const auto l1 = assemble(liu.neg_log_b, n, r.entropy_terms, r.holevo_sum);
  r.theorem1_bound = l1.bound;
  r.delta = l1.delta;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      r.complementarity.push_back({"q_MU(" + bases[a].label() + "," + bases[b].label() + ")",
                                   mu_constant(bases[a], bases[b]).q_mu});
    }
  }
  r.complementarity.push_back({"neg_log_b", liu.neg_log_b});

  std::vector<NamedValue> generic;
  if (n <= kMaxZhangMeasurements) {
    const double zhang = zhang_bound(bases, rho.reduce(Subsystems{kSubsystemA}));
    r.complementarity.push_back({"zhang_max", zhang});
    generic.push_back({"corollary1", assemble(zhang, n, r.entropy_terms, r.holevo_sum).bound});
  }
  generic.push_back({"liu_unclamped", liu.neg_log_b +
                                        static_cast<double>(n - 1) * r.entropy_terms.entropy_A -
                                        r.holevo_sum});
  if (n == 2 && scenario.split() == 1) {
    generic.push_back({"tripartite_mu", tripartite_mu_bound(bases[0], bases[1])});
    generic.push_back({"dolat_two_measurement",
                     assemble(mu_constant(bases[0], bases[1]).q_mu, 2, r.entropy_terms,
                              r.holevo_sum)
                         .bound});
  }
  r.generic_bounds = generic;

  double strongest = r.theorem1_bound;
  if (rho.dims() == std::vector<std::size_t>{2, 2, 2} && n == 3 && !non_mub_pair(scenario)) {
    const auto l2 = assemble_coles(r.entropy_terms, r.holevo_sum);
    r.coles_bound = l2.bound;
    r.delta_prime = l2.delta_prime;
    r.slack_L2 = r.uncertainty_U - l2.bound;
    r.holds_L2 = *r.slack_L2 >= -kInequalityTol;
    strongest = std::max(strongest, l2.bound);
  }
  for (const auto& v : generic) strongest = std::max(strongest, v.value);

  r.slack_L1 = r.uncertainty_U - r.theorem1_bound;
  r.holds_L1 = r.slack_L1 >= -kInequalityTol;
  r.slack = r.uncertainty_U - strongest;
  return r;
}

}  // namespace eur
