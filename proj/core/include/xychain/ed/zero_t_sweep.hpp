#pragma once

#include <vector>

#include "xychain/ed/lanczos.hpp"

namespace xychain::ed {

/// Zero-temperature magnetization staircase of a finite chain.
///
/// The field couples to the conserved total S^z, so every sector of the
/// XX part is solved once (Lanczos) and the field dependence is analytic:
/// E_n(h) = E0_XX(n) - h (n - N/2). Ground-state properties versus h are
/// then sector lookups, with level crossings exactly at the sector-energy
/// differences. This is what produces the staircase structure of the
/// finite-size concurrence curves.
class ZeroTemperatureSweep {
 public:
  /// Solves sectors n_up = ceil(N/2)..N (the ones that win at h >= 0) and
  /// computes the concurrence of the pair (i0, i0+m) in each sector ground
  /// state, with i0 = 0 for periodic chains (translation invariance) and
  /// the centered choice i0 = (N-m)/2 for open chains.
  ZeroTemperatureSweep(int sites, Boundary bc, double coupling, int distance,
                       const LanczosOptions& options = {});

  int sites() const { return sites_; }
  int distance() const { return distance_; }

  /// Fields where the winning sector changes (ascending); the last entry
  /// is the saturation field.
  const std::vector<double>& crossing_fields() const { return crossings_; }

  int winning_sector(double h) const;
  double ground_energy(double h) const;
  double concurrence(double h) const;

  /// Distance from h to the nearest level crossing.
  double crossing_distance(double h) const;

  /// In-sector Lanczos gap of the sector winning at h.
  double sector_gap(double h) const;

 private:
  int sites_;
  Boundary bc_;
  double coupling_;
  int distance_;
  int first_sector_;
  std::vector<double> xx_energy_;     // E0 of the XX part per solved sector
  std::vector<double> xx_gap_;
  std::vector<double> concurrence_;   // pair concurrence per sector ground state
  std::vector<double> crossings_;
};

}  // namespace xychain::ed
