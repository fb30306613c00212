#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eur/bounds.hpp"
#include "eur/error.hpp"
#include "eur/states.hpp"
#include "oracles.hpp"

using namespace eur;

namespace {

constexpr double kPi = std::numbers::pi;

MeasurementScenario case_scenario(int case_id) {
  const auto [x, y, z] = pauli_bases();
  return MeasurementScenario({x, y, z}, case_id == 1 ? 2 : 1);
}

}  // namespace

TEST_CASE("make_ghz is the pure GHZ projector") {
  const auto ghz = make_ghz();
  CHECK(ghz.dims() == std::vector<std::size_t>{2, 2, 2});
  const auto& m = ghz.matrix();
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const bool corner = (i == 0 || i == 7) && (j == 0 || j == 7);
      CHECK(std::abs(m(i, j) - Complex(corner ? 0.5 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("make_werner trace, Hermiticity and spectrum") {
  for (double p : {0.0, 0.1, 0.4, 0.75, 1.0}) {
    const auto rho = make_werner(p);
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) < 1e-12);
    CHECK(hermiticity_defect(rho.matrix()) < 1e-12);
    const auto ev = hermitian_eigenvalues(rho.matrix());
    for (std::size_t k = 0; k < 7; ++k) CHECK(ev[k] == doctest::Approx(p / 8.0).epsilon(1e-12));
    CHECK(ev[7] == doctest::Approx(1.0 - 7.0 * p / 8.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(make_werner(-0.01), DomainError);
  CHECK_THROWS_AS(make_werner(1.01), DomainError);
  CHECK_THROWS_AS(make_werner(std::nan("")), DomainError);
}

TEST_CASE("make_generalized_w amplitudes and domain") {
  const auto w0 = make_generalized_w(0.0, kPi / 4.0);
  CHECK(std::abs(w0.matrix()(1, 1) - Complex(1.0)) < 1e-15);

  const auto w = make_generalized_w(1.1, 0.3);
  const auto& m = w.matrix();
  CHECK(m(4, 4).real() == doctest::Approx(std::pow(std::sin(1.1) * std::cos(0.3), 2)));
  CHECK(m(2, 2).real() == doctest::Approx(std::pow(std::sin(1.1) * std::sin(0.3), 2)));
  CHECK(m(1, 1).real() == doctest::Approx(std::pow(std::cos(1.1), 2)));
  // Pure: tr(rho^2) = 1.
  CHECK(oracle::power_sums(m)[1] == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(make_generalized_w(-0.1, 0.0), DomainError);
  CHECK_THROWS_AS(make_generalized_w(kPi + 1e-9, 0.0), DomainError);
  CHECK_THROWS_AS(make_generalized_w(1.0, 2.0 * kPi), DomainError);
  CHECK_NOTHROW(make_generalized_w(kPi, 0.0));
}

TEST_CASE("pauli_bases are pairwise mutually unbiased") {
  const auto bases = pauli_bases();
  CHECK(bases[0].label() == "x");
  CHECK(bases[1].label() == "y");
  CHECK(bases[2].label() == "z");
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      for (const auto& u : bases[a].vectors())
        for (const auto& v : bases[b].vectors())
          CHECK(oracle::sq_overlap(u, v) == doctest::Approx(0.5).epsilon(1e-15));
    }
  }
}

TEST_CASE("closed_form_werner endpoints and spot value") {
  CHECK(closed_form_werner(0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(closed_form_werner(1.0) == doctest::Approx(3.0).epsilon(1e-15));
  const double p = 0.4;
  CHECK(closed_form_werner(p) ==
        doctest::Approx(-(p / 2) * std::log2(p / 8) - ((2 - p) / 2) * std::log2((2 - p) / 8)));
  CHECK_THROWS_AS(closed_form_werner(1.5), DomainError);
}

TEST_CASE("wstate_terms at theta = 0") {
  const auto t = wstate_terms(0.0);
  CHECK(t.gamma_plus == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(t.gamma_minus) < 1e-15);
  CHECK_THROWS_AS(closed_form_wstate(0.5, 3), DomainError);
  CHECK_THROWS_AS(closed_form_wstate(-0.5, 1), DomainError);
}

TEST_CASE("closed_form_wstate case 1 U at theta = pi/2 is one bit") {
  // Bell pair on AB, C in |0>: H(X|B) = H(Y|B) = 0, H(Z|C) = 1.
  CHECK(closed_form_wstate(kPi / 2.0, 1).uncertainty == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("numeric Werner quantities match the closed form on the p grid") {
  for (int case_id : {1, 2}) {
    for (double p : linear_grid(0.0, 1.0, 101)) {
      const auto r = case_quantities(make_werner(p), case_scenario(case_id));
      const double expected = closed_form_werner(p);
      CHECK(r.uncertainty_U == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
      CHECK(r.theorem1_bound == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
      CHECK(*r.coles_bound == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("numeric W-state quantities match the closed forms on the theta grid") {
  for (int case_id : {1, 2}) {
    for (double theta : linear_grid(0.0, kPi, 41)) {
      const auto r = case_quantities(make_generalized_w(theta, kPi / 4.0), case_scenario(case_id));
      const auto c = closed_form_wstate(theta, case_id);
      CHECK(r.uncertainty_U == doctest::Approx(c.uncertainty).epsilon(1e-9).scale(1.0));
      CHECK(r.theorem1_bound == doctest::Approx(c.lower_bound_1).epsilon(1e-9).scale(1.0));
      CHECK(*r.coles_bound == doctest::Approx(c.lower_bound_2).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("Werner reduced state on A is maximally mixed so U - L2 vanishes") {
  for (double p : {0.0, 0.33, 0.9}) {
    const auto rho = make_werner(p);
    CHECK(von_neumann_entropy(rho.reduce(Subsystems{0})) == doctest::Approx(1.0).epsilon(1e-12));
    const auto r = case_quantities(rho, case_scenario(1));
    CHECK(std::abs(r.uncertainty_U - *r.coles_bound) < 1e-8);
  }
}

TEST_CASE("random_density and random_pure are deterministic valid states") {
  const std::vector<std::size_t> dims{2, 2, 2};
  CHECK(random_density(dims, 7).matrix() == random_density(dims, 7).matrix());
  CHECK_FALSE(random_density(dims, 7).matrix() == random_density(dims, 8).matrix());
  CHECK(random_pure(dims, 7).matrix() == random_pure(dims, 7).matrix());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pure = random_pure(dims, seed);
    CHECK(oracle::power_sums(pure.matrix())[1] == doctest::Approx(1.0).epsilon(1e-12));
    const auto mixed = random_density({3, 2}, seed);
    CHECK(std::abs(mixed.matrix().trace() - Complex(1.0)) < 1e-12);
    CHECK(hermitian_eigenvalues(mixed.matrix()).front() > -1e-12);
  }
  CHECK_THROWS_AS(random_density({8, 16}, 1), DimensionError);
}

TEST_CASE("Hilbert-Schmidt ensemble mean approaches I/8") {
  CMatrix mean(8);
  constexpr int kSamples = 1000;
  for (int k = 0; k < kSamples; ++k) mean += random_density({2, 2, 2}, 1000 + k).matrix();
  mean *= 1.0 / kSamples;
  CHECK(max_abs_diff(mean, make_maximally_mixed({2, 2, 2}).matrix()) < 0.05);
}

TEST_CASE("random_basis is orthonormal and deterministic") {
  for (std::size_t d : {2u, 3u, 5u}) {
    const auto b = random_basis(d, 17, "r");
    CHECK(b.label() == "r");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        CHECK(oracle::sq_overlap(b.vectors()[i], b.vectors()[j]) ==
              doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
    CHECK(random_basis(d, 17, "r").vectors() == b.vectors());
  }
}

TEST_CASE("linear_grid") {
  const auto g = linear_grid(0.0, 1.0, 101);
  REQUIRE(g.size() == 101);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[50] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(linear_grid(0.3, 0.9, 1) == std::vector<double>{0.3});
  CHECK(linear_grid(0.0, kPi, 2).back() == kPi);
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), ContractError);
}
