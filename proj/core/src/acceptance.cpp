#include "xychain/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "xychain/criticality.hpp"
#include "xychain/ed/free_fermion.hpp"
#include "xychain/ed/reduced.hpp"
#include "xychain/ed/zero_t_sweep.hpp"
#include "xychain/io.hpp"
#include "xychain/pair_state.hpp"

namespace xychain {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    ok = ok && condition;
    if (detail.tellp() > 0) detail << "; ";
    if (!condition) detail << "FAILED: ";
    detail << what;
  }
};

std::string num(double v) { return format_number(v); }

ChainParams at(double h, double T) {
  ChainParams p;
  p.h = h;
  p.T = T;
  return p;
}

// 1. onset fields h_c^E for m = 2, 3, 4
Check criterion_onset_fields() {
  Check c;
  const auto p2 = entangled_field(2, at(0, 0));
  c.require(p2.has_value() && std::abs(p2->location - 0.5) <= 1e-3,
            "h_cE(2) = " + (p2 ? num(p2->location) : "none") + " (want 0.500 +- 0.001)");
  const auto p3 = entangled_field(3, at(0, 0));
  c.require(p3.has_value() && p3->location >= 0.78 && p3->location <= 0.82,
            "h_cE(3) = " + (p3 ? num(p3->location) : "none") + " (want [0.78, 0.82])");
  const auto p4 = entangled_field(4, at(0, 0));
  c.require(p4.has_value() && p4->location >= 0.88 && p4->location <= 0.92,
            "h_cE(4) = " + (p4 ? num(p4->location) : "none") + " (want [0.88, 0.92])");
  return c;
}

// 2. disentangled regimes at h = 0 and h = 1.5J, T = 0
Check criterion_disentangled() {
  Check c;
  for (int m = 2; m <= 4; ++m) {
    const double w0 = entanglement_witness(m, at(0.0, 0.0));
    c.require(w0 < 1e-12, "W(m=" + std::to_string(m) + ", h=0) = " + num(w0));
    const double w15 = entanglement_witness(m, at(1.5, 0.0));
    c.require(w15 < 1e-12, "W(m=" + std::to_string(m) + ", h=1.5) = " + num(w15));
  }
  return c;
}

// 3. T_c peak location for m = 2
Check criterion_tc_peak_location() {
  Check c;
  const auto peak = tc_max(2, at(0, 0));
  c.require(std::abs(peak.h_star - 1.0) <= 0.01,
            "h* = " + num(peak.h_star) + ", Tc* = " + num(peak.tc_star) +
                " (want h* = 1.00 +- 0.01)");
  return c;
}

// 4. T_c peak ratios between m = 2, 3, 4
Check criterion_tc_peak_ratios() {
  Check c;
  const auto p2 = tc_max(2, at(0, 0));
  const auto p3 = tc_max(3, at(0, 0));
  const auto p4 = tc_max(4, at(0, 0));
  const double r23 = p2.tc_star / p3.tc_star;
  const double r34 = p3.tc_star / p4.tc_star;
  c.require(r23 >= 2.55 && r23 <= 3.45,
            "Tc*(2)/Tc*(3) = " + num(r23) + " (want [2.55, 3.45]); Tc* = " +
                num(p2.tc_star) + ", " + num(p3.tc_star) + ", " + num(p4.tc_star));
  c.require(r34 >= 2.55 && r34 <= 3.45, "Tc*(3)/Tc*(4) = " + num(r34) + " (want [2.55, 3.45])");
  return c;
}

// 5. double-T_c regime above the quantum critical field
Check criterion_double_tc() {
  Check c;
  const auto roots2 = critical_temperatures(2, 1.05, at(0, 0));
  c.require(roots2.size() == 2 && roots2[0].location > 0.0 &&
                roots2[0].location < roots2[1].location,
            "m=2, h=1.05: " + std::to_string(roots2.size()) + " roots (want 2)");
  for (int m : {3, 4}) {
    const auto roots = critical_temperatures(m, 1.15, at(0, 0));
    std::string locations;
    for (const auto& r : roots) locations += " " + num(r.location);
    c.require(roots.empty(), "m=" + std::to_string(m) + ", h=1.15: " +
                                 std::to_string(roots.size()) + " roots (want 0;" +
                                 locations + ")");
  }
  return c;
}

// 6. phase-boundary topology for m = 2
Check criterion_boundary_topology() {
  Check c;
  std::vector<double> low_grid;
  for (int i = 0; i <= 25; ++i) low_grid.push_back(0.5 + 0.02 * i);
  const auto low = phase_boundary(2, low_grid, at(0, 0));
  // single-root fields: exactly one point at that h
  std::vector<double> single;
  for (double h : low_grid) {
    std::vector<double> tcs;
    for (const auto& p : low.points) {
      if (p.h == h) tcs.push_back(p.tc);
    }
    if (tcs.size() == 1) single.push_back(tcs[0]);
  }
  bool monotone = single.size() >= 20;
  for (std::size_t i = 0; i + 1 < single.size(); ++i) {
    monotone = monotone && single[i + 1] >= single[i] - 1e-12;
  }
  c.require(monotone, "single branch on [0.5, 1.0]: " + std::to_string(single.size()) +
                          " points, non-decreasing");

  std::vector<double> high_grid;
  for (int i = 0; i <= 5; ++i) high_grid.push_back(1.0 + 0.02 * i);
  const auto high = phase_boundary(2, high_grid, at(0, 0));
  std::vector<double> tc1s, tc2s;
  for (double h : high_grid) {
    std::vector<double> tcs;
    for (const auto& p : high.points) {
      if (p.h == h) tcs.push_back(p.tc);
    }
    std::sort(tcs.begin(), tcs.end());
    if (tcs.size() == 2) tc1s.push_back(tcs[0]);
    if (!tcs.empty()) tc2s.push_back(tcs.back());
  }
  bool tc1_up = tc1s.size() >= 4;
  for (std::size_t i = 0; i + 1 < tc1s.size(); ++i) tc1_up = tc1_up && tc1s[i + 1] > tc1s[i];
  c.require(tc1_up, "T_c1 increasing on (1.0, 1.1]");
  double rel = 1.0;
  if (!tc2s.empty()) {
    const auto [mn, mx] = std::minmax_element(tc2s.begin(), tc2s.end());
    rel = (*mx - *mn) / *mx;
  }
  c.require(tc2s.size() == high_grid.size() && rel <= 0.10,
            "T_c2 relative variation on [1.0, 1.1] = " + num(rel) + " (want <= 0.10)");
  return c;
}

// 7. Wick-identity oracle: Pfaffian route vs the explicit polynomials
Check criterion_wick_identity(unsigned seed) {
  Check c;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int draw = 0; draw < 10000; ++draw) {
    CorrelatorTable table;
    table.params = at(0, 0);
    table.n_max = 4;
    const double f0 = unit(rng);
    table.f = {f0, 0, 0, 0, 0};
    for (int n = 1; n <= 4; ++n) {
      table.f[static_cast<std::size_t>(n)] = f0 * (2.0 * unit(rng) - 1.0);
    }
    std::array<double, 5> f{};
    std::copy(table.f.begin(), table.f.end(), f.begin());
    for (int m = 2; m <= 4; ++m) {
      worst = std::max(worst, std::abs(z_general(m, table) - z_polynomial(m, f)));
    }
  }
  c.require(worst <= 1e-12,
            "max |z_general - z_polynomial| = " + num(worst) + " over 1e4 tables (want <= 1e-12)");
  return c;
}

// 8. JW exactness: spin ED vs open-chain free fermions
Check criterion_jw_exactness() {
  Check c;
  double worst = 0.0;
  std::string worst_at = "-";
  for (int n : {8, 10, 12}) {
    for (double h : {0.0, 0.5, 1.0, 1.5}) {
      for (double T : {0.1, 0.5, 1.0}) {
        const auto ensemble = ed::thermal_state(n, ed::Boundary::open, at(h, T));
        const auto fermion = ed::free_fermion_finite(n, at(h, T));
        for (int m = 1; m <= 4; ++m) {
          const int i = (n - m) / 2;
          const auto rho = ed::reduced_pair_rho(ensemble, i, i + m).rho;
          const auto& e = fermion[static_cast<std::size_t>(m - 1)];
          const double d = std::max({std::abs(rho(0, 0) - e.x_plus),
                                     std::abs(rho(1, 1) - e.y_plus),
                                     std::abs(rho(2, 2) - e.y_minus),
                                     std::abs(rho(3, 3) - e.x_minus),
                                     std::abs(rho(2, 1) - e.z)});
          if (d > worst) {
            worst = d;
            worst_at = "N=" + std::to_string(n) + " h=" + num(h) + " T=" + num(T) +
                       " m=" + std::to_string(m);
          }
        }
      }
    }
  }
  c.require(worst <= 1e-8,
            "max element mismatch = " + num(worst) + " at " + worst_at + " (want <= 1e-8)");
  return c;
}

// 9. Lanczos inset: finite-size staircases approach the analytic curve
Check criterion_lanczos_inset() {
  Check c;
  const ed::ZeroTemperatureSweep chain16(16, ed::Boundary::periodic, 1.0, 2);
  const ed::ZeroTemperatureSweep chain20(20, ed::Boundary::periodic, 1.0, 2);

  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(0.02 * i);

  auto analytic = [](double h) {
    return std::max(0.0, entanglement_witness(2, at(h, 0.0)));
  };

  double sq16 = 0.0, sq20 = 0.0;
  int kept = 0;
  int entangled16 = 0, entangled20 = 0;
  std::vector<double> plateaus16, plateaus20;
  for (double h : grid) {
    const double c16 = chain16.concurrence(h);
    const double c20 = chain20.concurrence(h);
    if (c16 > 1e-10 && h < 1.0) {
      ++entangled16;
      plateaus16.push_back(c16);
    }
    if (c20 > 1e-10 && h < 1.0) {
      ++entangled20;
      plateaus20.push_back(c20);
    }
    if (chain16.crossing_distance(h) <= 0.02 || chain20.crossing_distance(h) <= 0.02) {
      continue;  // level crossing: ground state ambiguous, excluded
    }
    const double ref = analytic(h);
    sq16 += (c16 - ref) * (c16 - ref);
    sq20 += (c20 - ref) * (c20 - ref);
    ++kept;
  }
  const double d16 = std::sqrt(sq16 / kept);
  const double d20 = std::sqrt(sq20 / kept);

  auto distinct = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-9; }),
            v.end());
    return v.size();
  };
  c.require(entangled16 > 0 && entangled20 > 0,
            "entangled window inside (0, h_c) present for N=16 and N=20");
  c.require(distinct(plateaus16) >= 2 && distinct(plateaus20) >= 2,
            "level-crossing step structure (>= 2 plateaus each)");
  c.require(d20 < d16, "L2(N=20) = " + num(d20) + " < L2(N=16) = " + num(d16) + " on " +
                           std::to_string(kept) + " grid points");
  return c;
}

// 10. closed form vs Wootters recipe on random physical draws
Check criterion_closed_vs_wootters(unsigned seed) {
  Check c;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> distance(1, 4);
  double worst = 0.0;
  for (int draw = 0; draw < 10000; ++draw) {
    const double h = 2.0 * unit(rng);
    double T = 2.0 * unit(rng);
    if (T < 1e-3) T = 0.0;  // sub-1e-3 draws hit the zero-T branch
    const int m = distance(rng);
    const auto table = correlator_table(m, at(h, T));
    const auto elements = density_matrix_elements(m, table);
    const double closed = concurrence_closed(elements).value;
    const double wootters = concurrence_wootters(assemble_rho(elements)).value;
    worst = std::max(worst, std::abs(closed - wootters));
  }
  c.require(worst <= 1e-9,
            "max |C_closed - C_Wootters| = " + num(worst) + " over 1e4 draws (want <= 1e-9)");
  return c;
}

struct Spec {
  int id;
  const char* name;
};

constexpr Spec kCriteria[] = {
    {1, "onset fields h_c^E(m=2,3,4)"},
    {2, "disentangled regimes at h=0 and h=1.5J"},
    {3, "T_c peak location at h_c (m=2)"},
    {4, "T_c peak ratios m=2:3:4"},
    {5, "double-T_c regime above h_c"},
    {6, "phase-boundary topology (m=2)"},
    {7, "Wick-identity oracle (1e4 tables)"},
    {8, "JW exactness: spin ED vs free fermions"},
    {9, "Lanczos inset N=16 vs N=20"},
    {10, "closed form vs Wootters (1e4 draws)"},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  CriterionResult result;
  result.id = id;
  for (const auto& spec : kCriteria) {
    if (spec.id == id) result.name = spec.name;
  }
  if (result.name.empty()) throw std::invalid_argument("run_criterion: id must be 1..10");

  const auto start = Clock::now();
  Check check;
  switch (id) {
    case 1: check = criterion_onset_fields(); break;
    case 2: check = criterion_disentangled(); break;
    case 3: check = criterion_tc_peak_location(); break;
    case 4: check = criterion_tc_peak_ratios(); break;
    case 5: check = criterion_double_tc(); break;
    case 6: check = criterion_boundary_topology(); break;
    case 7: check = criterion_wick_identity(options.rng_seed); break;
    case 8: check = criterion_jw_exactness(); break;
    case 9: check = criterion_lanczos_inset(); break;
    case 10: check = criterion_closed_vs_wootters(options.rng_seed + 1); break;
    default: break;
  }
  result.passed = check.ok;
  result.detail = check.detail.str();
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (const auto& spec : kCriteria) {
    results.push_back(run_criterion(spec.id, options));
  }
  return results;
}

std::string format_criterion_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " criterion-" << r.id << " " << r.name << ": "
      << r.detail << " [" << format_number(r.seconds) << " s]";
  return out.str();
}

}  // namespace xychain
