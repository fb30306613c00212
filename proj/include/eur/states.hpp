#pragma once

// Named three-qubit families, Pauli bases, random ensembles and the
// analytic reference curves for the Werner-type and generalized W states.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "eur/entropy.hpp"

namespace eur {

/// Dimension cap for the random ensembles.
inline constexpr std::size_t kRandomDimCap = 64;

/// (|000> + |111>)/sqrt(2)
DensityOperator make_ghz();

/// (1 - p)|GHZ><GHZ| + p I/8. Throws DomainError unless 0 <= p <= 1.
DensityOperator make_werner(double p);

/// Pure state sin(t)cos(f)|100> + sin(t)sin(f)|010> + cos(t)|001>.
/// Throws DomainError unless 0 <= theta <= pi and 0 <= phi < 2 pi.
DensityOperator make_generalized_w(double theta, double phi);

/// I/d on the given dims.
DensityOperator make_maximally_mixed(const std::vector<std::size_t>& dims);

/// Eigenbases of sigma_x, sigma_y, sigma_z labelled "x", "y", "z", each
/// ordered (+1, -1).
std::array<ProjectiveBasis, 3> pauli_bases();

/// Hilbert-Schmidt random mixed state G G^dagger / tr(G G^dagger).
DensityOperator random_density(const std::vector<std::size_t>& dims, std::uint64_t seed);

/// Haar-random pure state.
DensityOperator random_pure(const std::vector<std::size_t>& dims, std::uint64_t seed);

/// Haar-random orthonormal basis of C^d (Gram-Schmidt on Gaussian vectors).
ProjectiveBasis random_basis(std::size_t dim, std::uint64_t seed, std::string label);

/// -(p/2) log2(p/8) - ((2-p)/2) log2((2-p)/8): the common value of the
/// uncertainty and both lower bounds, in either partition, for the Werner
/// family.
double closed_form_werner(double p);

/// Individual terms of the generalized W curves at phi = pi/4.
struct WStateTerms {
  double alpha;
  double beta;
  double gamma_plus;
  double gamma_minus;
  double alpha_prime;
  double zeta;
  double alpha_double_prime;
  double zeta_prime;
};

WStateTerms wstate_terms(double theta);

struct ClosedFormCase {
  double uncertainty;
  double lower_bound_1;
  double lower_bound_2;
};

/// Case 1 (x, y guessed by B; z by C) or case 2 (x by B; y, z by C) at
/// phi = pi/4. Throws DomainError for other case ids or theta outside [0, pi].
ClosedFormCase closed_form_wstate(double theta, int case_id);

/// `steps` evenly spaced points from start to end inclusive (start alone
/// when steps == 1).
std::vector<double> linear_grid(double start, double end, std::size_t steps);

}  // namespace eur
