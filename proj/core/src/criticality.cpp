#include "xychain/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xychain/threading.hpp"

namespace xychain {

double entanglement_witness(int m, const ChainParams& params) {
  const auto table = correlator_table(std::max(m, 1), params);
  const auto elements = density_matrix_elements(m, table);
  return concurrence_closed(elements).witness;
}

namespace {

constexpr double kOnsetScanStep = 1e-3;
constexpr double kBracketWidth = 1e-6;
constexpr int kTcScanPoints = 400;
constexpr double kTcScanLow = 1e-4;

bool entangled(double w) { return w > kWitnessThreshold; }

// Bisection on the predicate W > threshold. Runs past the 1e-6 bracket
// until the midpoint witness itself is within 1e-9 of the threshold, so
// every reported point re-evaluates to |W| <= 1e-8.
CriticalPoint refine(int m, const ChainParams& base, bool vary_field, double lo,
                     double hi, bool lo_entangled, CriticalPoint::Kind kind) {
  double mid_witness = 0.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    ChainParams p = base;
    (vary_field ? p.h : p.T) = mid;
    mid_witness = entanglement_witness(m, p);
    if (hi - lo <= kBracketWidth &&
        (std::abs(mid_witness - kWitnessThreshold) <= 1e-9 || hi - lo < 1e-13)) {
      break;
    }
    if (entangled(mid_witness) == lo_entangled) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  CriticalPoint point;
  point.kind = kind;
  point.location = 0.5 * (lo + hi);
  point.bracket_lo = lo;
  point.bracket_hi = hi;
  point.residual_witness = mid_witness;
  return point;
}

}  // namespace

std::optional<CriticalPoint> entangled_field(int m, const ChainParams& zero_t) {
  zero_t.require();
  if (m < 1) throw std::invalid_argument("entangled_field: m must be >= 1");
  if (zero_t.T != 0.0) {
    throw std::invalid_argument("entangled_field: defined at T = 0");
  }
  if (m == 1) {
    // nearest neighbors are entangled already at zero field
    CriticalPoint p;
    p.kind = CriticalPoint::Kind::entangled_field;
    p.location = 0.0;
    ChainParams at = zero_t;
    at.h = 0.0;
    p.residual_witness = entanglement_witness(1, at);
    return p;
  }
  const double hc = zero_t.critical_field();
  double prev_h = 0.0;
  ChainParams p = zero_t;
  p.h = 0.0;
  bool prev_entangled = entangled(entanglement_witness(m, p));
  for (double h = kOnsetScanStep; h < hc + 0.5 * kOnsetScanStep; h += kOnsetScanStep) {
    p.h = std::min(h, hc);
    const bool now = entangled(entanglement_witness(m, p));
    if (!prev_entangled && now) {
      return refine(m, zero_t, /*vary_field=*/true, prev_h, p.h, false,
                    CriticalPoint::Kind::entangled_field);
    }
    prev_entangled = now;
    prev_h = p.h;
  }
  return std::nullopt;  // no onset inside (0, h_c)
}

std::vector<CriticalPoint> critical_temperatures(int m, double h, const ChainParams& base) {
  if (m < 1) throw std::invalid_argument("critical_temperatures: m must be >= 1");
  if (!(h >= 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("critical_temperatures: h must be finite and >= 0");
  }
  ChainParams p = base;
  p.h = h;
  const double t_hi = 4.0 * p.J;
  const double ratio = std::pow(t_hi / kTcScanLow, 1.0 / (kTcScanPoints - 1));

  std::vector<double> grid(kTcScanPoints);
  for (int i = 0; i < kTcScanPoints; ++i) grid[i] = kTcScanLow * std::pow(ratio, i);

  std::vector<char> flags(kTcScanPoints);
  parallel_for(kTcScanPoints, 0, [&](std::size_t i) {
    ChainParams q = p;
    q.T = grid[i];
    flags[i] = entangled(entanglement_witness(m, q)) ? 1 : 0;
  });

  std::vector<CriticalPoint> roots;
  for (int i = 0; i + 1 < kTcScanPoints; ++i) {
    if (flags[i] != flags[i + 1]) {
      roots.push_back(refine(m, p, /*vary_field=*/false, grid[i], grid[i + 1],
                             flags[i] != 0, CriticalPoint::Kind::tc_single));
    }
  }
  if (roots.size() == 2) {
    roots[0].kind = CriticalPoint::Kind::tc_lower;
    roots[1].kind = CriticalPoint::Kind::tc_upper;
  }
  return roots;
}

namespace {

// The single root where exactly one exists; 0 in the zero-root and
// two-root regimes.
double single_branch_tc(int m, double h, const ChainParams& base) {
  const auto roots = critical_temperatures(m, h, base);
  return roots.size() == 1 ? roots[0].location : 0.0;
}

}  // namespace

TcMax tc_max(int m, const ChainParams& base) {
  const auto onset = entangled_field(m, [&] {
    ChainParams p = base;
    p.T = 0.0;
    return p;
  }());
  if (!onset) throw std::runtime_error("tc_max: no entangled field found");
  // do not start exactly on the onset, where the branch has zero height
  double a = onset->location + 1e-4;
  double b = 1.2 * base.J;
  constexpr double kGolden = 0.6180339887498949;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = single_branch_tc(m, c, base);
  double fd = single_branch_tc(m, d, base);
  while (b - a > 1e-3) {
    // ties at zero mean both probes sit past the branch cliff: go left
    const bool go_left = (fc > fd) || (fc == 0.0 && fd == 0.0);
    if (go_left) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = single_branch_tc(m, c, base);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = single_branch_tc(m, d, base);
    }
  }
  TcMax out;
  out.h_star = 0.5 * (a + b);
  out.tc_star = single_branch_tc(m, out.h_star, base);
  if (out.tc_star == 0.0) {
    // the midpoint can land a hair past the cliff; report the best probe
    const double best_h = fc >= fd ? c : d;
    const double best_tc = std::max(fc, fd);
    if (best_tc > 0.0) {
      out.h_star = best_h;
      out.tc_star = best_tc;
    }
  }
  return out;
}

std::vector<SweepPoint> sweep(int m, const std::vector<double>& h_grid,
                              const std::vector<double>& t_grid,
                              const ChainParams& base, int threads) {
  if (!std::is_sorted(h_grid.begin(), h_grid.end()) ||
      !std::is_sorted(t_grid.begin(), t_grid.end())) {
    throw std::invalid_argument("sweep: grids must be sorted");
  }
  std::vector<SweepPoint> out(h_grid.size() * t_grid.size());
  parallel_for(out.size(), threads, [&](std::size_t idx) {
    const std::size_t hi = idx / t_grid.size();
    const std::size_t ti = idx % t_grid.size();
    SweepPoint& pt = out[idx];  // h-major order fixed by the index map
    pt.h = h_grid[hi];
    pt.T = t_grid[ti];
    try {
      ChainParams p = base;
      p.h = pt.h;
      p.T = pt.T;
      pt.witness = entanglement_witness(m, p);
      pt.concurrence = std::max(0.0, pt.witness);
    } catch (const std::exception& err) {
      pt.ok = false;
      pt.error = err.what();
    }
  });
  return out;
}

PhaseBoundary phase_boundary(int m, const std::vector<double>& h_grid,
                             const ChainParams& base, int threads) {
  if (!std::is_sorted(h_grid.begin(), h_grid.end())) {
    throw std::invalid_argument("phase_boundary: h grid must be sorted");
  }
  PhaseBoundary boundary;
  boundary.m = m;
  std::vector<std::vector<CriticalPoint>> per_field(h_grid.size());
  parallel_for(h_grid.size(), threads, [&](std::size_t i) {
    per_field[i] = critical_temperatures(m, h_grid[i], base);
  });
  for (std::size_t i = 0; i < h_grid.size(); ++i) {
    for (const auto& root : per_field[i]) {
      PhaseBoundary::Point pt;
      pt.h = h_grid[i];
      pt.tc = root.location;
      pt.branch = root.kind == CriticalPoint::Kind::tc_lower
                      ? PhaseBoundary::Branch::lower
                      : PhaseBoundary::Branch::upper;
      boundary.points.push_back(pt);
    }
  }
  return boundary;
}

}  // namespace xychain
