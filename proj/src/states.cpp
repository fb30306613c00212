#include "eur/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "eur/error.hpp"
#include "eur/random.hpp"

namespace eur {

double CounterRng::normal() noexcept {
  // 1 - u keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

const std::vector<std::size_t> kThreeQubits{2, 2, 2};

DensityOperator pure_state(const CVector& amplitudes, std::vector<std::size_t> dims) {
  const double n = norm(amplitudes);
  CVector unit = amplitudes;
  for (auto& a : unit) a /= n;
  return DensityOperator(outer(unit, unit), std::move(dims));
}

std::size_t checked_random_dim(const std::vector<std::size_t>& dims) {
  const std::size_t d = product(dims);
  if (dims.empty() || d == 0 || d > kRandomDimCap) {
    throw DimensionError("random state dimension " + std::to_string(d) +
                         " outside [1, " + std::to_string(kRandomDimCap) + "]");
  }
  return d;
}

Complex complex_normal(CounterRng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re, im};
}

// x log2 y with the 0 log 0 = 0 convention.
double xlog2(double x, double y) {
  if (x == 0.0) return 0.0;
  return x * std::log2(y);
}

}  // namespace

DensityOperator make_ghz() {
  CVector psi(8);
  psi[0] = 1.0;
  psi[7] = 1.0;
  return pure_state(psi, kThreeQubits);
}

DensityOperator make_werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "make_werner: p = " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  CMatrix m = (1.0 - p) * make_ghz().matrix();
  m += (p / 8.0) * CMatrix::identity(8);
  return DensityOperator(std::move(m), kThreeQubits);
}

DensityOperator make_generalized_w(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi) ||
      !(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    std::ostringstream msg;
    msg << "make_generalized_w: (theta, phi) = (" << theta << ", " << phi
        << ") outside [0, pi] x [0, 2 pi)";
    throw DomainError(msg.str());
  }
  CVector psi(8);
  psi[0b100] = std::sin(theta) * std::cos(phi);
  psi[0b010] = std::sin(theta) * std::sin(phi);
  psi[0b001] = std::cos(theta);
  return pure_state(psi, kThreeQubits);
}

DensityOperator make_maximally_mixed(const std::vector<std::size_t>& dims) {
  const std::size_t d = product(dims);
  CMatrix m = CMatrix::identity(d);
  m *= 1.0 / static_cast<double>(d);
  return DensityOperator(std::move(m), dims);
}

std::array<ProjectiveBasis, 3> pauli_bases() {
  const double h = 1.0 / std::numbers::sqrt2;
  const Complex i{0.0, 1.0};
  return {ProjectiveBasis("x", {{h, h}, {h, -h}}),
          ProjectiveBasis("y", {{h, h * i}, {h, -h * i}}),
          ProjectiveBasis("z", {{1.0, 0.0}, {0.0, 1.0}})};
}

DensityOperator random_density(const std::vector<std::size_t>& dims, std::uint64_t seed) {
  const std::size_t d = checked_random_dim(dims);
  CounterRng rng(seed);
  CMatrix g(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) g(r, c) = complex_normal(rng);
  }
  CMatrix m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  // Exact Hermiticity; the product is Hermitian only up to roundoff.
  m = 0.5 * (m + m.adjoint());
  return DensityOperator(std::move(m), dims);
}

DensityOperator random_pure(const std::vector<std::size_t>& dims, std::uint64_t seed) {
  const std::size_t d = checked_random_dim(dims);
  CounterRng rng(seed);
  CVector psi(d);
  for (auto& a : psi) a = complex_normal(rng);
  return pure_state(psi, dims);
}

ProjectiveBasis random_basis(std::size_t dim, std::uint64_t seed, std::string label) {
  if (dim == 0 || dim > kRandomDimCap) throw DimensionError("random_basis: bad dimension");
  CounterRng rng(seed);
  std::vector<CVector> vectors;
  while (vectors.size() < dim) {
    CVector v(dim);
    for (auto& a : v) a = complex_normal(rng);
    // Two Gram-Schmidt passes keep the basis orthonormal to ~1e-15.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : vectors) {
        const Complex proj = inner(u, v);
        for (std::size_t k = 0; k < dim; ++k) v[k] -= proj * u[k];
      }
    }
    const double n = norm(v);
    if (n < 1e-8) continue;
    for (auto& a : v) a /= n;
    vectors.push_back(std::move(v));
  }
  return ProjectiveBasis(std::move(label), std::move(vectors));
}

double closed_form_werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("closed_form_werner: p outside [0, 1]");
  return -xlog2(p / 2.0, p / 8.0) - xlog2((2.0 - p) / 2.0, (2.0 - p) / 8.0);
}

WStateTerms wstate_terms(double theta) {
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double root = std::sqrt(3.0 + std::cos(4.0 * theta));
  const double plus = (2.0 + root) / 2.0;
  const double minus = std::max(0.0, (2.0 - root) / 2.0);
  const double mid = (2.0 * c2 + s2) / 2.0;

  WStateTerms t{};
  t.alpha = xlog2(s2 / 2.0, 2.0 * s2);
  t.beta = xlog2(mid, mid);
  t.gamma_plus = -xlog2(plus, plus / 4.0);
  t.gamma_minus = -xlog2(minus, minus / 4.0);
  t.alpha_prime = xlog2(s2, s2);
  t.zeta = xlog2(c2, c2 / 2.0);
  t.alpha_double_prime = xlog2(s2 / 2.0, 2.0 * s2 * s2 * s2);
  t.zeta_prime = xlog2(c2, c2);
  return t;
}

ClosedFormCase closed_form_wstate(double theta, int case_id) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("closed_form_wstate: theta outside [0, pi]");
  }
  const auto t = wstate_terms(theta);
  const double gammas = t.gamma_plus + t.gamma_minus;
  switch (case_id) {
    case 1: {
      const double u = t.alpha_prime + 2.0 * t.beta + gammas;
      return {u, -1.0 + t.alpha + t.beta + gammas, u};
    }
    case 2: {
      const double u = t.alpha_double_prime + t.zeta_prime + t.beta + gammas;
      return {u, t.alpha_prime + t.zeta + gammas, u};
    }
    default:
      throw DomainError("closed_form_wstate: case id must be 1 or 2");
  }
}

std::vector<double> linear_grid(double start, double end, std::size_t steps) {
  if (steps == 0) throw ContractError("linear_grid: steps must be >= 1");
  std::vector<double> grid(steps);
  if (steps == 1) {
    grid[0] = start;
    return grid;
  }
  const double width = end - start;
  for (std::size_t k = 0; k < steps; ++k) {
    grid[k] = start + width * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  grid.back() = end;
  return grid;
}

}  // namespace eur
