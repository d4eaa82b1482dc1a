#pragma once

#include "xychain/ed/hamiltonian.hpp"
#include "xychain/ed/thermal.hpp"
#include "xychain/pair_state.hpp"

namespace xychain::ed {

/// Partial trace over all sites except (i, j), 0 <= i < j < N. The result
/// satisfies the PairDensityMatrix invariants; S^z conservation produces
/// the X-shaped sparsity automatically.
PairDensityMatrix reduced_pair_rho(const SpinState& state, int i, int j);
PairDensityMatrix reduced_pair_rho(const ThermalEnsemble& ensemble, int i, int j);

struct SpinCorrelators {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
};

/// <S_i^a S_j^a> for a = x, y, z from the reduced pair matrix.
SpinCorrelators spin_correlators(const PairDensityMatrix& rho);
SpinCorrelators spin_correlators(const SpinState& state, int i, int j);
SpinCorrelators spin_correlators(const ThermalEnsemble& ensemble, int i, int j);

}  // namespace xychain::ed
