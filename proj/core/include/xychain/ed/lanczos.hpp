#pragma once

#include <optional>

#include "xychain/ed/hamiltonian.hpp"

namespace xychain::ed {

struct LanczosOptions {
  int max_iterations = 300;
  double residual_tolerance = 1e-9;  // ||Hv - Ev|| target (spec asks <= 1e-8)
  unsigned seed = 20240; // fixed: runs are reproducible at fixed thread count
  int ritz_values = 2;   // lowest eigenpair plus the in-sector gap estimate
};

struct SectorEigenResult {
  double e0 = 0.0;
  double e1 = 0.0;              // second Ritz value (gap partner)
  std::vector<double> ground;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> ritz_history;  // lowest Ritz value per iteration
};

/// Lanczos with full reorthogonalization on one S^z sector; matrix-free
/// matvecs only. Deterministic start vector from options.seed.
SectorEigenResult lowest_eigenpair(const SpinBasis& basis, const ChainParams& params,
                                   Boundary bc, const LanczosOptions& options = {});

struct GroundStateResult {
  SpinState state;
  double gap = 0.0;          // to the next level across all sectors
  bool near_degenerate = false;  // gap < 1e-8: level crossing, state arbitrary
  double residual = 0.0;
};

/// Global ground state: per-sector Lanczos, minimum over sectors.
/// N up to 24 (matrix-free storage only). Near-degeneracies (gap < 1e-8)
/// are flagged, not resolved.
GroundStateResult ground_state(int sites, Boundary bc, const ChainParams& params,
                               const LanczosOptions& options = {});

}  // namespace xychain::ed
