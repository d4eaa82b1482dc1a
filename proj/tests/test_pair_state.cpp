#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xychain/criticality.hpp"
#include "xychain/pair_state.hpp"
#include "xychain/wick.hpp"

using namespace xychain;

namespace {

constexpr double kPi = std::numbers::pi;

ChainParams at(double h, double T) {
  ChainParams p;
  p.h = h;
  p.T = T;
  return p;
}

CorrelatorTable table_from(std::vector<double> f) {
  CorrelatorTable t;
  t.params = at(0, 0);
  t.n_max = static_cast<int>(f.size()) - 1;
  t.f = std::move(f);
  return t;
}

CorrelatorTable random_table(std::mt19937& rng, int n_max) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> f(static_cast<std::size_t>(n_max) + 1);
  f[0] = unit(rng);
  for (int n = 1; n <= n_max; ++n) f[static_cast<std::size_t>(n)] = f[0] * (2 * unit(rng) - 1);
  return table_from(std::move(f));
}

}  // namespace

TEST_CASE("pfaffian basics") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = 3.5;
  a(1, 0) = -3.5;
  CHECK(pfaffian(a) == doctest::Approx(3.5));

  // Pf^2 = det for a random antisymmetric matrix
  std::mt19937 rng(11);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      b(i, j) = gauss(rng);
      b(j, i) = -b(i, j);
    }
  }
  CHECK(pfaffian(b) * pfaffian(b) == doctest::Approx(b.determinant()).epsilon(1e-10));
  CHECK(pfaffian(Eigen::MatrixXd::Zero(3, 3)) == 0.0);
}

TEST_CASE("element polynomials at hand-checked points") {
  // saturated phase: rho = |uu><uu|
  const auto sat = density_matrix_elements(2, table_from({1, 0, 0}));
  CHECK(sat.z == 0.0);
  CHECK(sat.x_plus == doctest::Approx(1.0));
  CHECK(sat.x_minus == doctest::Approx(0.0));
  CHECK(sat.y_plus == doctest::Approx(0.0));

  // h = 0, T = 0 values: f = (1/2, -1/pi, 0)
  const auto half = density_matrix_elements(2, table_from({0.5, -1.0 / kPi, 0.0}));
  CHECK(half.z == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(half.x_plus == doctest::Approx(0.25));

  // m = 3 block collapses at f0 = 1/2, f1 = f2 = 0 for any f3
  for (double c : {0.3, -0.11, 0.047}) {
    CHECK(z_polynomial(3, {0.5, 0.0, 0.0, c, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
  }

  // m = 1 collapses the string: z = f1
  const auto nn = density_matrix_elements(1, table_from({0.5, -0.3}));
  CHECK(nn.z == doctest::Approx(-0.3));
  CHECK(nn.x_plus == doctest::Approx(0.25 - 0.09));
}

TEST_CASE("z_general reproduces the explicit m = 1..4 polynomials") {
  std::mt19937 rng(7);
  for (int draw = 0; draw < 2000; ++draw) {
    const auto t = random_table(rng, 4);
    std::array<double, 5> f{};
    std::copy(t.f.begin(), t.f.end(), f.begin());
    for (int m = 1; m <= 4; ++m) {
      CHECK(std::abs(z_general(m, t) - z_polynomial(m, f)) <= 1e-12);
    }
  }
  // fully occupied band: the string annihilates
  CHECK(z_general(3, table_from({1, 0, 0, 0})) == doctest::Approx(0.0));
}

TEST_CASE("z_general input validation") {
  const auto t = table_from({0.5, 0.1, 0.05});
  CHECK_THROWS_AS(z_general(0, t), std::invalid_argument);
  CHECK_THROWS_AS(z_general(3, t), std::invalid_argument);  // n_max too small
  CHECK_THROWS_AS(density_matrix_elements(0, t), std::invalid_argument);
}

TEST_CASE("m = 5 extension goes through the Wick route") {
  const auto t = correlator_table(5, at(0.95, 0.0));
  const auto e = density_matrix_elements(5, t);
  CHECK(e.z == doctest::Approx(z_general(5, t)));
  CHECK(e.x_plus == doctest::Approx(t.at(0) * t.at(0) - t.at(5) * t.at(5)));
}

TEST_CASE("assemble_rho builds the X-shaped matrix and rejects junk") {
  PairElements mixed;
  mixed.m = 2;
  mixed.x_plus = mixed.y_plus = mixed.y_minus = mixed.x_minus = 0.25;
  mixed.z = 0.0;
  CHECK(assemble_rho(mixed).rho.isApprox(Eigen::Matrix4d::Identity() * 0.25, 1e-14));

  PairElements sat;
  sat.m = 2;
  sat.x_plus = 1.0;
  const auto rho = assemble_rho(sat).rho;
  CHECK(rho(0, 0) == 1.0);
  CHECK(rho.trace() == doctest::Approx(1.0));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho);
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(1.0));  // rank-1 projector

  PairElements bad = mixed;
  bad.x_plus = 0.3;  // trace 1.05
  CHECK_THROWS_AS(assemble_rho(bad), std::invalid_argument);
  bad = mixed;
  bad.z = 0.4;  // central block not PSD
  CHECK_THROWS_AS(assemble_rho(bad), std::invalid_argument);
  bad = mixed;
  bad.x_plus = -1e-11;  // inside the clamp window
  bad.x_minus = 0.5 + 1e-11;
  CHECK(assemble_rho(bad).rho(0, 0) == 0.0);
}

TEST_CASE("closed-form concurrence arithmetic") {
  PairElements e;
  e.m = 2;
  e.z = 0.3;
  e.x_plus = 0.04;
  e.x_minus = 0.16;
  e.y_plus = e.y_minus = 0.4;
  const auto r = concurrence_closed(e);
  CHECK(r.value == doctest::Approx(0.44));
  CHECK(r.witness == doctest::Approx(0.44));
  CHECK(r.value ==
        doctest::Approx(std::max(0.0, r.lambdas[0] - r.lambdas[1] - r.lambdas[2] - r.lambdas[3]))
            .epsilon(1e-10));

  e.z = 0.0;
  CHECK(concurrence_closed(e).value == 0.0);

  e.x_plus = -5e-12;  // radicand -8e-13, inside the clamp window
  e.x_minus = 0.16;
  CHECK(concurrence_closed(e).value >= 0.0);
  e.x_plus = -1e-3;  // radicand -1.6e-4: invariant breach
  CHECK_THROWS_AS(concurrence_closed(e), std::invalid_argument);
}

TEST_CASE("Wootters recipe on reference states") {
  PairDensityMatrix mixed;
  mixed.rho = Eigen::Matrix4d::Identity() * 0.25;
  CHECK(concurrence_wootters(mixed).value == doctest::Approx(0.0));

  PairDensityMatrix singlet;  // (|ud> - |du>)/sqrt(2)
  singlet.rho(1, 1) = 0.5;
  singlet.rho(2, 2) = 0.5;
  singlet.rho(1, 2) = -0.5;
  singlet.rho(2, 1) = -0.5;
  CHECK(concurrence_wootters(singlet).value == doctest::Approx(1.0).epsilon(1e-12));

  // entangled window between h_c^E and h_c at zero temperature
  const auto t = correlator_table(2, at(0.9, 0.0));
  const auto rho = assemble_rho(density_matrix_elements(2, t));
  CHECK(concurrence_wootters(rho).value > 0.0);

  // no entanglement without the field
  const auto t0 = correlator_table(2, at(0.0, 0.0));
  const auto rho0 = assemble_rho(density_matrix_elements(2, t0));
  CHECK(concurrence_wootters(rho0).value == 0.0);

  PairDensityMatrix junk;
  junk.rho = Eigen::Matrix4d::Identity() * 0.25;
  junk.rho(0, 0) = 0.5;  // trace 1.25
  CHECK_THROWS_AS(concurrence_wootters(junk), std::invalid_argument);
}

TEST_CASE("closed form and Wootters agree on physical draws") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int draw = 0; draw < 300; ++draw) {
    const double h = 2.0 * unit(rng);
    double T = 2.0 * unit(rng);
    if (T < 1e-3) T = 0.0;
    const int m = 1 + static_cast<int>(3.999 * unit(rng));
    const auto t = correlator_table(m, at(h, T));
    const auto e = density_matrix_elements(m, t);
    CHECK(std::abs(concurrence_closed(e).value -
                   concurrence_wootters(assemble_rho(e)).value) <= 1e-9);
  }
}

TEST_CASE("element invariants along a (h, T) sweep") {
  for (double h : {0.0, 0.4, 0.7, 0.95, 1.2, 1.8}) {
    for (double T : {0.0, 0.05, 0.3, 1.0}) {
      for (int m = 1; m <= 4; ++m) {
        const auto t = correlator_table(m, at(h, T));
        const auto e = density_matrix_elements(m, t);
        CHECK(e.trace() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(e.y_plus == doctest::Approx(e.y_minus).epsilon(1e-12));
        CHECK(e.y_plus == doctest::Approx(t.at(0) - e.x_plus).epsilon(1e-12));
        const auto rho = assemble_rho(e).rho;  // throws on invariant breach
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho);
        CHECK(es.eigenvalues().minCoeff() >= -1e-10);
      }
    }
  }
}

TEST_CASE("concurrence decreases with pair distance near the critical field") {
  for (double h : {0.92, 0.95, 0.98}) {
    double prev = 2.0;
    for (int m = 2; m <= 4; ++m) {
      const auto t = correlator_table(m, at(h, 0.0));
      const double c = concurrence_closed(density_matrix_elements(m, t)).value;
      CHECK(c <= prev + 1e-12);
      prev = c;
    }
  }
}
