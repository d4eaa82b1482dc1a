#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xychain/pair_state.hpp"
#include "xychain/params.hpp"

namespace xychain {

/// Signed entanglement witness W(h, T; m) = 2(|Z| - sqrt(X+ X-)) in the
/// thermodynamic limit. C = max(0, W); root finding happens on W because
/// the concurrence is flat at zero.
double entanglement_witness(int m, const ChainParams& params);

// W above this threshold counts as entangled; separates true positivity
// from quadrature noise.
inline constexpr double kWitnessThreshold = 1e-12;

struct CriticalPoint {
  enum class Kind { entangled_field, tc_single, tc_lower, tc_upper };
  Kind kind = Kind::entangled_field;
  double location = 0.0;           // field or temperature
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual_witness = 0.0;   // W at the reported location
};

/// Smallest field in (0, h_c) where the zero-temperature witness first
/// turns positive: coarse scan with step 1e-3, then bisection to 1e-6.
/// m = 1 is entangled already at h = 0 and returns location 0. Returns
/// nullopt if no onset is found (the scan parameters are in `scan_log`
/// semantics of the error message thrown by the CLI layer).
std::optional<CriticalPoint> entangled_field(int m, const ChainParams& zero_t_params);

/// All temperatures in [1e-4, 4J] where the witness crosses the entangled
/// threshold, from a 400-point log grid refined by bisection to 1e-6.
/// 0, 1, or 2 roots depending on (m, h); an empty list is a valid result.
std::vector<CriticalPoint> critical_temperatures(int m, double h, const ChainParams& base);

struct TcMax {
  double h_star = 0.0;
  double tc_star = 0.0;
};

/// Maximizes the single-branch T_c(h) over h in [h_c^E, 1.2 J] by
/// golden-section (objective = the root where exactly one exists, else 0;
/// ties at zero move the bracket toward lower fields, where the nonzero
/// plateau lives). h_star resolved to 1e-3.
TcMax tc_max(int m, const ChainParams& base);

struct SweepPoint {
  double h = 0.0;
  double T = 0.0;
  double concurrence = 0.0;
  double witness = 0.0;
  bool ok = true;
  std::string error;
};

/// Dense (h, T) evaluation, h-major row order regardless of the thread
/// count. Failed points are marked, never dropped.
std::vector<SweepPoint> sweep(int m, const std::vector<double>& h_grid,
                              const std::vector<double>& t_grid,
                              const ChainParams& base, int threads = 0);

struct PhaseBoundary {
  enum class Branch { lower, upper };
  struct Point {
    double h = 0.0;
    double tc = 0.0;
    Branch branch = Branch::upper;
  };
  int m = 0;
  std::vector<Point> points;
};

/// Critical temperatures along a field grid; a single root is labeled
/// `upper` (it continues the T_c2 branch, with T_c1 = 0 below h_c).
PhaseBoundary phase_boundary(int m, const std::vector<double>& h_grid,
                             const ChainParams& base, int threads = 0);

}  // namespace xychain
