#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xychain/ed/free_fermion.hpp"
#include "xychain/ed/lanczos.hpp"
#include "xychain/ed/reduced.hpp"
#include "xychain/ed/thermal.hpp"
#include "xychain/ed/zero_t_sweep.hpp"
#include "xychain/spectrum.hpp"

using namespace xychain;
using namespace xychain::ed;

namespace {

constexpr double kPi = std::numbers::pi;

ChainParams params(double h, double T = 0.0) {
  ChainParams p;
  p.h = h;
  p.T = T;
  return p;
}

}  // namespace

TEST_CASE("open-chain modes match the analytic sine orbitals") {
  const int n = 8;
  FreeFermionChain chain(n, params(0.4, 0.0));
  // eps_q = J cos(q pi/(N+1)) - h, ascending
  std::vector<double> expected;
  for (int q = 1; q <= n; ++q) expected.push_back(std::cos(q * kPi / (n + 1)) - 0.4);
  std::sort(expected.begin(), expected.end());
  for (int q = 0; q < n; ++q) {
    CHECK(chain.mode_energies()(q) == doctest::Approx(expected[q]).epsilon(1e-12));
  }
}

TEST_CASE("periodic boundary is rejected") {
  CHECK_THROWS_AS(FreeFermionChain(8, params(0.0, 0.1), Boundary::periodic),
                  std::invalid_argument);
}

TEST_CASE("free fermions equal spin ED on the thermal chain") {
  // JW exactness at one (N, h, T); the acceptance suite runs the full matrix
  const int n = 12;
  const auto p = params(0.7, 0.2);
  const auto ens = thermal_state(n, Boundary::open, p);
  FreeFermionChain chain(n, p);
  const int m = 2;
  const int i = (n - m) / 2;
  const auto rho = reduced_pair_rho(ens, i, i + m).rho;
  const auto e = chain.pair_elements(i, i + m);
  CHECK(rho(0, 0) == doctest::Approx(e.x_plus).epsilon(1e-9));
  CHECK(rho(1, 1) == doctest::Approx(e.y_plus).epsilon(1e-9));
  CHECK(rho(2, 2) == doctest::Approx(e.y_minus).epsilon(1e-9));
  CHECK(rho(3, 3) == doctest::Approx(e.x_minus).epsilon(1e-9));
  CHECK(rho(2, 1) == doctest::Approx(e.z).epsilon(1e-9));
}

TEST_CASE("saturated finite chain has no central-pair entanglement") {
  const auto pairs = free_fermion_finite(16, params(2.0, 0.0));
  for (const auto& e : pairs) {
    CHECK(concurrence_closed(e).value == 0.0);
  }
}

TEST_CASE("large open chain converges to the thermodynamic-limit f_n") {
  const int n = 2000;
  const auto p = params(0.8, 0.3);
  FreeFermionChain chain(n, p);
  const int c = n / 2;
  for (int d = 0; d <= 4; ++d) {
    CHECK(std::abs(chain.contraction(c, c + d) - fourier_coefficient(d, p)) < 1e-4);
  }
}

TEST_CASE("zero-temperature sweep reproduces direct ground-state results") {
  const int n = 8;
  ZeroTemperatureSweep sweep(n, Boundary::periodic, 1.0, 2);
  const auto& crossings = sweep.crossing_fields();
  REQUIRE(crossings.size() == 4);  // sectors 4..8
  for (std::size_t i = 0; i + 1 < crossings.size(); ++i) {
    CHECK(crossings[i] < crossings[i + 1]);
  }
  // winner and concurrence agree with a direct Lanczos ground state away
  // from the crossings
  for (double h : {0.3, 0.95, 1.4}) {
    if (sweep.crossing_distance(h) < 0.02) continue;
    const auto gs = ground_state(n, Boundary::periodic, params(h));
    CHECK(gs.state.n_up == sweep.winning_sector(h));
    CHECK(gs.state.energy == doctest::Approx(sweep.ground_energy(h)).epsilon(1e-9));
    const auto rho = reduced_pair_rho(gs.state, 0, 2);
    CHECK(concurrence_wootters(rho).value ==
          doctest::Approx(sweep.concurrence(h)).epsilon(1e-8));
  }
  // beyond saturation the chain polarizes and disentangles
  CHECK(sweep.winning_sector(crossings.back() + 0.1) == n);
  CHECK(sweep.concurrence(crossings.back() + 0.1) == 0.0);
}

TEST_CASE("spin correlators on reference states") {
  const auto polarized = ground_state(5, Boundary::open, params(3.0));
  const auto cp = spin_correlators(polarized.state, 1, 3);
  CHECK(cp.xx == doctest::Approx(0.0));
  CHECK(cp.yy == doctest::Approx(0.0));
  CHECK(cp.zz == doctest::Approx(0.25));

  const auto singlet = ground_state(2, Boundary::open, params(0.0));
  const auto cs = spin_correlators(singlet.state, 0, 1);
  CHECK(cs.xx == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(cs.yy == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(cs.zz == doctest::Approx(-0.25).epsilon(1e-10));
}

TEST_CASE("transverse correlations dominate at the onset field") {
  // N = 16 periodic, m = 2 pair just above h_c^E = 0.5
  const auto gs = ground_state(16, Boundary::periodic, params(0.52));
  const auto rho = reduced_pair_rho(gs.state, 0, 2);
  const auto c = spin_correlators(rho);
  const double sz_i = 0.5 * (rho.rho(0, 0) + rho.rho(1, 1) - rho.rho(2, 2) - rho.rho(3, 3));
  const double sz_j = 0.5 * (rho.rho(0, 0) - rho.rho(1, 1) + rho.rho(2, 2) - rho.rho(3, 3));
  CHECK(std::abs(c.xx) > std::abs(c.zz - sz_i * sz_j));
}
