#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "xychain/ed/basis.hpp"
#include "xychain/params.hpp"

namespace xychain::ed {

/// Full thermal density operator of a finite chain (N <= 12): sector-block
/// dense diagonalization, Boltzmann weights with k_B = 1.
class ThermalEnsemble {
 public:
  ThermalEnsemble(int sites, Boundary bc, const ChainParams& params);

  int sites() const { return sites_; }
  Boundary boundary() const { return bc_; }
  const ChainParams& params() const { return params_; }

  /// Boltzmann populations of every eigenstate, in (sector, level) order;
  /// they sum to 1.
  const std::vector<double>& populations() const { return populations_; }

  /// Ground-state energy and the partition function relative to it,
  /// Z' = sum exp(-(E - E_min)/T).
  double minimum_energy() const { return e_min_; }
  double shifted_partition_function() const { return z_shifted_; }

  struct SectorSpectrum {
    std::shared_ptr<SpinBasis> basis;
    Eigen::VectorXd energies;      // includes the field term
    Eigen::MatrixXd vectors;       // columns are eigenstates
  };
  const std::vector<SectorSpectrum>& sectors() const { return sectors_; }

 private:
  int sites_;
  Boundary bc_;
  ChainParams params_;
  std::vector<SectorSpectrum> sectors_;
  std::vector<double> populations_;
  double e_min_ = 0.0;
  double z_shifted_ = 0.0;
};

ThermalEnsemble thermal_state(int sites, Boundary bc, const ChainParams& params);

}  // namespace xychain::ed
