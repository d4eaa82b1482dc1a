#pragma once

#include <Eigen/Dense>
#include <vector>

#include "xychain/ed/basis.hpp"
#include "xychain/pair_state.hpp"
#include "xychain/params.hpp"

namespace xychain::ed {

/// Exact open-chain free-fermion solution of the Jordan-Wigner image:
/// diagonalizes the N x N single-particle hopping matrix (J/2 on the
/// off-diagonals, -h on the diagonal) and evaluates two-point contractions
/// and pair elements through the same Wick string machinery used in the
/// thermodynamic limit. Machine-precision exact for the finite chain.
///
/// Open boundary only: the periodic spin chain maps to fermions with a
/// parity-dependent boundary term, which the spin-language ED covers
/// instead.
class FreeFermionChain {
 public:
  FreeFermionChain(int sites, const ChainParams& params, Boundary bc = Boundary::open);

  int sites() const { return sites_; }
  const Eigen::VectorXd& mode_energies() const { return energies_; }

  /// <a_i^+ a_j> at the chain's temperature.
  double contraction(int i, int j) const;

  /// Pair elements for sites (i, j): x+/x-/y+/y- from densities and the
  /// string z from the Wick Pfaffian.
  PairElements pair_elements(int i, int j) const;

  /// Central pairs at distances m = 1..m_max (pair (i, i+m) with
  /// i = (N-m)/2).
  std::vector<PairElements> central_pairs(int m_max = 4) const;

 private:
  int sites_;
  ChainParams params_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd modes_;        // columns are single-particle orbitals
  Eigen::VectorXd occupations_;  // Fermi factors per mode
};

/// Spec-facing convenience: central pair elements m = 1..4.
std::vector<PairElements> free_fermion_finite(int sites, const ChainParams& params,
                                              Boundary bc = Boundary::open);

}  // namespace xychain::ed
