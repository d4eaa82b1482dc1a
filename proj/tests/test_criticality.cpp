#include <doctest.h>

#include <cmath>

#include "xychain/criticality.hpp"
#include "xychain/io.hpp"

using namespace xychain;

namespace {

ChainParams zero_t() {
  ChainParams p;
  p.T = 0.0;
  return p;
}

}  // namespace

TEST_CASE("nearest neighbors are entangled at zero field") {
  const auto onset = entangled_field(1, zero_t());
  REQUIRE(onset.has_value());
  CHECK(onset->location == 0.0);
  CHECK(onset->residual_witness > 0.0);
}

TEST_CASE("onset field for second neighbors sits at h_c/2") {
  const auto onset = entangled_field(2, zero_t());
  REQUIRE(onset.has_value());
  CHECK(std::abs(onset->location - 0.5) <= 1e-3);
  CHECK(onset->bracket_hi - onset->bracket_lo <= 1e-6);
  CHECK(std::abs(onset->residual_witness) <= 1e-8);
  // witness changes sign across the bracket
  ChainParams lo = zero_t();
  lo.h = onset->bracket_lo;
  ChainParams hi = zero_t();
  hi.h = onset->bracket_hi;
  CHECK(entanglement_witness(2, lo) <= kWitnessThreshold);
  CHECK(entanglement_witness(2, hi) > kWitnessThreshold);
}

TEST_CASE("entangled_field input validation") {
  ChainParams warm = zero_t();
  warm.T = 0.5;
  CHECK_THROWS_AS(entangled_field(2, warm), std::invalid_argument);
  CHECK_THROWS_AS(entangled_field(0, zero_t()), std::invalid_argument);
}

TEST_CASE("critical temperature counts across the phase diagram") {
  // below the onset field: never entangled
  CHECK(critical_temperatures(2, 0.2, zero_t()).empty());

  // single root between h_c^E and h_c
  const auto one = critical_temperatures(2, 0.8, zero_t());
  REQUIRE(one.size() == 1);
  CHECK(one[0].location == doctest::Approx(0.13357).epsilon(5e-3));
  CHECK(one[0].kind == CriticalPoint::Kind::tc_single);
  CHECK(std::abs(one[0].residual_witness) <= 1e-8);

  // two roots just above h_c
  const auto two = critical_temperatures(2, 1.05, zero_t());
  REQUIRE(two.size() == 2);
  CHECK(two[0].location < two[1].location);
  CHECK(two[0].location > 0.0);
  CHECK(two[0].kind == CriticalPoint::Kind::tc_lower);
  CHECK(two[1].kind == CriticalPoint::Kind::tc_upper);
  CHECK(two[1].location == doctest::Approx(0.15325).epsilon(5e-3));
}

TEST_CASE("thin entangled slivers above h_c persist for m = 3, 4") {
  // the witness genuinely exceeds the threshold in a narrow T window at
  // h = 1.15 (amplitude ~1e-3 for m = 3, ~2e-4 for m = 4), so two roots
  // exist even though the region is invisible at figure scale
  for (int m : {3, 4}) {
    const auto roots = critical_temperatures(m, 1.15, zero_t());
    CHECK(roots.size() == 2);
  }
  ChainParams probe = zero_t();
  probe.h = 1.15;
  probe.T = 0.05;
  CHECK(entanglement_witness(3, probe) > 1e-4);
}

TEST_CASE("sweep grids evaluate deterministically") {
  const std::vector<double> hs{0.0};
  std::vector<double> ts;
  for (int i = 0; i <= 20; ++i) ts.push_back(0.05 + 0.05 * i);
  const auto rows = sweep(2, hs, ts, zero_t());
  REQUIRE(rows.size() == ts.size());
  for (const auto& r : rows) {
    CHECK(r.ok);
    CHECK(r.concurrence == 0.0);  // no entanglement without a field
  }

  // saturated point
  const auto sat = sweep(2, {2.0}, {0.0}, zero_t());
  CHECK(sat[0].concurrence == 0.0);

  // identical bytes for 1 vs 2 worker threads
  std::vector<double> hs2{0.6, 0.9, 1.05};
  const auto a = sweep(2, hs2, ts, zero_t(), 1);
  const auto b = sweep(2, hs2, ts, zero_t(), 2);
  CHECK(sweep_csv(2, a, {}) == sweep_csv(2, b, {}));
}

TEST_CASE("sweep marks failed points instead of dropping them") {
  const auto rows = sweep(2, {-0.5, 0.5}, {0.1}, zero_t());
  REQUIRE(rows.size() == 2);
  CHECK(!rows[0].ok);
  CHECK(!rows[0].error.empty());
  CHECK(rows[1].ok);
  CHECK_THROWS_AS(sweep(2, {1.0, 0.5}, {0.1}, zero_t()), std::invalid_argument);
}

TEST_CASE("high temperature disentangles every field") {
  for (double h : {0.0, 0.5, 1.0, 1.5}) {
    ChainParams p = zero_t();
    p.h = h;
    p.T = 4.0;
    CHECK(std::max(0.0, entanglement_witness(2, p)) < 1e-10);
  }
}

TEST_CASE("phase boundary labels branches") {
  const auto boundary = phase_boundary(2, {0.3, 0.8, 1.05}, zero_t());
  CHECK(boundary.m == 2);
  // 0 roots at 0.3, 1 at 0.8, 2 at 1.05
  REQUIRE(boundary.points.size() == 3);
  CHECK(boundary.points[0].h == 0.8);
  CHECK(boundary.points[0].branch == PhaseBoundary::Branch::upper);
  CHECK(boundary.points[1].h == 1.05);
  CHECK(boundary.points[1].branch == PhaseBoundary::Branch::lower);
  CHECK(boundary.points[2].branch == PhaseBoundary::Branch::upper);
}
