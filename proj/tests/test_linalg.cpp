#include <doctest.h>

#include <cmath>

#include "eur/error.hpp"
#include "eur/linalg.hpp"
#include "eur/random.hpp"
#include "eur/states.hpp"
#include "oracles.hpp"

using namespace eur;

namespace {

const CMatrix kSigmaX{{0.0, 1.0}, {1.0, 0.0}};
const CMatrix kSigmaZ{{1.0, 0.0}, {0.0, -1.0}};

CMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex{rng.normal(), rng.normal()};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

CMatrix random_general(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{rng.normal(), rng.normal()};
  return m;
}

// Small-integer entries keep every product exact.
CMatrix random_integer(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Complex{std::floor(rng.uniform() * 7.0) - 3.0, std::floor(rng.uniform() * 7.0) - 3.0};
  return m;
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
  CHECK(kron(CMatrix::identity(2), CMatrix::identity(2)) == CMatrix::identity(4));
}

TEST_CASE("kron places the left factor on the most significant index") {
  const double diag[] = {1.0, 1.0, -1.0, -1.0};
  CHECK(kron(kSigmaZ, CMatrix::identity(2)) == CMatrix::diagonal(diag));

  const CMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
  const CMatrix p1{{0.0, 0.0}, {0.0, 1.0}};
  const CMatrix k = kron(p0, p1);
  // |01> has index 0 * 2 + 1.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(k(i, j) == Complex(i == 1 && j == 1 ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("kron is associative") {
  const auto a = random_integer(2, 1);
  const auto b = random_integer(3, 2);
  const auto c = random_integer(2, 3);
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  const auto g = random_general(2, 7);
  CHECK(max_abs_diff(kron(kron(g, b), c), kron(g, kron(b, c))) < 1e-12);
}

TEST_CASE("kron mixed product rule") {
  const auto d = random_general(3, 4);
  const auto a = random_general(2, 1);
  const auto b = random_general(3, 2);
  const auto c = random_general(2, 3);
  const auto lhs = kron(a, b) * kron(c, d);
  const auto rhs = kron(a * c, b * d);
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("kron enforces the dimension cap") {
  CHECK_THROWS_AS(kron(CMatrix::identity(64), CMatrix::identity(65)), DimensionError);
  CHECK_THROWS_AS(kron(CMatrix::identity(4), CMatrix::identity(4), 8), DimensionError);
  CHECK(kron(CMatrix::identity(4), CMatrix::identity(2), 8).dim() == 8);
}

TEST_CASE("CMatrix rejects malformed input") {
  CHECK_THROWS_AS(CMatrix(2, std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS(CMatrix(1, {Complex{std::nan(""), 0.0}}), DomainError);
  CHECK_THROWS_AS((CMatrix{{1.0, 0.0}, {0.0}}), DimensionError);
}

TEST_CASE("hermitian_eig on diagonal input returns the standard basis") {
  const double diag[] = {0.75, 0.25};
  const auto eig = hermitian_eig(CMatrix::diagonal(diag));
  REQUIRE(eig.eigenvalues.size() == 2);
  CHECK(eig.eigenvalues[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eig.eigenvalues[1] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(std::abs(eig.eigenvectors[0][1]) == doctest::Approx(1.0));
  CHECK(std::abs(eig.eigenvectors[1][0]) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig of sigma_x") {
  const auto eig = hermitian_eig(kSigmaX);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  // + eigenvector is (1, 1)/sqrt(2) up to phase.
  CHECK(std::abs(eig.eigenvectors[1][0]) == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::abs(eig.eigenvectors[1][1]) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("hermitian_eig of a Werner state matches the power-sum oracle") {
  const auto rho = make_werner(0.4).matrix();
  const auto values = hermitian_eigenvalues(rho);
  for (int k = 0; k < 7; ++k) CHECK(values[k] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(values[7] == doctest::Approx(0.65).epsilon(1e-12));

  // tr(rho^k) = 7 * 0.05^k + 0.65^k fixes the characteristic polynomial.
  const auto sums = oracle::power_sums(rho);
  for (std::size_t k = 0; k < sums.size(); ++k) {
    const double expected = 7.0 * std::pow(0.05, k + 1) + std::pow(0.65, k + 1);
    CHECK(sums[k] == doctest::Approx(expected).epsilon(1e-12));
    double from_eig = 0.0;
    for (double v : values) from_eig += std::pow(v, k + 1);
    CHECK(from_eig == doctest::Approx(sums[k]).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  const CMatrix upper{{1.0, 1.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(hermitian_eig(upper), ContractError);
  // Within tolerance is accepted.
  const CMatrix nearly{{1.0, 1.0}, {1.0 + 1e-12, 1.0}};
  CHECK_NOTHROW(hermitian_eig(nearly));
}

TEST_CASE("hermitian_eig property: residual and orthonormality on random input") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const auto a = random_hermitian(n, seed);
    const auto eig = hermitian_eig(a);
    CMatrix v(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) v(i, k) = eig.eigenvectors[k][i];
    const auto lambda = CMatrix::diagonal(eig.eigenvalues);
    CHECK(max_abs_diff(a * v, v * lambda) < 1e-10);
    CHECK(max_abs_diff(v.adjoint() * v, CMatrix::identity(n)) < 1e-10);
    CHECK(max_abs_diff(a, v * lambda * v.adjoint()) < 1e-10);
    CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
  }
}

TEST_CASE("hermitian_eig is deterministic and handles degenerate spectra") {
  const auto a = random_hermitian(6, 99);
  const auto s1 = hermitian_eig(a);
  const auto s2 = hermitian_eig(a);
  CHECK(s1.eigenvalues == s2.eigenvalues);
  CHECK(s1.eigenvectors == s2.eigenvectors);

  const auto eye = hermitian_eig(CMatrix::identity(5));
  for (double v : eye.eigenvalues) CHECK(v == 1.0);
  const auto zero = hermitian_eigenvalues(CMatrix(3));
  for (double v : zero) CHECK(v == 0.0);
}

TEST_CASE("partial_trace of a product state recovers the factor") {
  const CMatrix rho_a{{0.7, Complex{0.1, 0.2}}, {Complex{0.1, -0.2}, 0.3}};
  const CMatrix rho_b{{0.4, 0.0}, {0.0, 0.6}};
  const std::size_t dims[] = {2, 2};
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  CHECK(max_abs_diff(partial_trace(kron(rho_a, rho_b), dims, keep_a), rho_a) < 1e-15);
  CHECK(max_abs_diff(partial_trace(kron(rho_a, rho_b), dims, keep_b), rho_b) < 1e-15);
}

TEST_CASE("partial_trace of GHZ onto A is maximally mixed (index oracle)") {
  const auto ghz = make_ghz().matrix();
  const std::size_t dims[] = {2, 2, 2};
  const std::size_t keep[] = {0};
  const auto reduced = partial_trace(ghz, dims, keep);
  const auto expected = oracle::trace_bc(oracle::to_mat8(ghz));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(reduced(i, j) - expected[i][j]) < 1e-15);
      CHECK(std::abs(reduced(i, j) - Complex(i == j ? 0.5 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("partial_trace matches the explicit index oracle on random states") {
  const std::size_t dims[] = {2, 2, 2};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = random_density({2, 2, 2}, seed).matrix();
    const auto m8 = oracle::to_mat8(rho);
    const std::size_t keep_ab[] = {0, 1};
    const std::size_t keep_ac[] = {0, 2};
    const auto ab = partial_trace(rho, dims, keep_ab);
    const auto ac = partial_trace(rho, dims, keep_ac);
    const auto ab_oracle = oracle::trace_c(m8);
    const auto ac_oracle = oracle::trace_b(m8);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(ab(i, j) - ab_oracle[i][j]) < 1e-14);
        CHECK(std::abs(ac(i, j) - ac_oracle[i][j]) < 1e-14);
      }
    }
  }
}

TEST_CASE("partial_trace properties: trace, positivity, composition") {
  const std::size_t dims[] = {2, 3, 2};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rho = random_density({2, 3, 2}, seed).matrix();
    const std::size_t keep_a[] = {0};
    const std::size_t keep_ab[] = {0, 1};
    const auto a = partial_trace(rho, dims, keep_a);
    const auto ab = partial_trace(rho, dims, keep_ab);
    CHECK(std::abs(a.trace() - Complex{1.0}) < 1e-12);
    CHECK(hermiticity_defect(ab) < 1e-14);
    CHECK(hermitian_eigenvalues(ab).front() >= -1e-9);

    // tr_B(tr_C(rho)) = tr_BC(rho)
    const std::size_t dims_ab[] = {2, 3};
    CHECK(max_abs_diff(partial_trace(ab, dims_ab, keep_a), a) < 1e-12);
  }
}

TEST_CASE("partial_trace keeps subsystems in original order regardless of keep order") {
  const auto rho = random_density({2, 3, 2}, 5).matrix();
  const std::size_t dims[] = {2, 3, 2};
  const std::size_t forward[] = {0, 2};
  const std::size_t backward[] = {2, 0};
  CHECK(partial_trace(rho, dims, forward) == partial_trace(rho, dims, backward));
}

TEST_CASE("partial_trace rejects mismatched dims") {
  const std::size_t dims[] = {2, 2};
  const std::size_t keep[] = {0};
  const std::size_t bad_keep[] = {2};
  CHECK_THROWS_AS(partial_trace(CMatrix::identity(8), dims, keep), DimensionError);
  CHECK_THROWS_AS(partial_trace(CMatrix::identity(4), dims, bad_keep), DimensionError);
  CHECK_THROWS_AS(partial_trace(CMatrix::identity(4), dims, std::span<const std::size_t>{}),
                  DimensionError);
}
