#pragma once

#include <span>
#include <vector>

#include "xychain/ed/basis.hpp"
#include "xychain/params.hpp"

namespace xychain::ed {

/// Finite-chain pure state: coefficients over one S^z sector.
struct SpinState {
  int sites = 0;
  Boundary bc = Boundary::open;
  int n_up = 0;
  std::vector<double> coefficients;
  double energy = 0.0;

  double norm() const;
};

/// Matrix-free y += H x within one sector:
///   H = (J/2) sum_bonds (S+_a S-_b + S-_a S+_b) - h sum_l S^z_l.
/// Hops are bit swaps with amplitude J/2; the field term is diagonal,
/// -h (n_up - N/2), constant inside the sector.
void apply_hamiltonian(const SpinBasis& basis, const ChainParams& params, Boundary bc,
                       std::span<const double> in, std::span<double> out);

/// Convenience overload acting on a SpinState.
SpinState apply_hamiltonian(const SpinState& state, const ChainParams& params, Boundary bc);

/// Sector bonds: (l, l+1) for l < N-1, plus (N-1, 0) when periodic.
std::vector<std::pair<int, int>> chain_bonds(int sites, Boundary bc);

}  // namespace xychain::ed
