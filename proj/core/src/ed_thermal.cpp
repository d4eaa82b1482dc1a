#include "xychain/ed/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "xychain/ed/hamiltonian.hpp"

namespace xychain::ed {

namespace {

Eigen::MatrixXd dense_sector_hamiltonian(const SpinBasis& basis, const ChainParams& params,
                                         Boundary bc) {
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double hop = 0.5 * params.J;
  const double diag = -params.h * (basis.n_up() - 0.5 * basis.sites());
  const auto bonds = chain_bonds(basis.sites(), bc);
  for (Eigen::Index col = 0; col < dim; ++col) {
    h(col, col) = diag;
    const std::uint32_t s = basis.state(static_cast<std::size_t>(col));
    for (const auto& [a, b] : bonds) {
      const std::uint32_t mask = (1u << a) | (1u << b);
      const std::uint32_t bits = s & mask;
      if (bits == 0 || bits == mask) continue;
      h(static_cast<Eigen::Index>(basis.index_of(s ^ mask)), col) += hop;
    }
  }
  return h;
}

}  // namespace

ThermalEnsemble::ThermalEnsemble(int sites, Boundary bc, const ChainParams& params)
    : sites_(sites), bc_(bc), params_(params) {
  params.require();
  if (sites < 2 || sites > 12) {
    throw std::invalid_argument("ThermalEnsemble: sites must be 2..12 (cost guard)");
  }
  if (params.T <= 0.0) {
    throw std::invalid_argument("ThermalEnsemble: needs T > 0 (use ground_state at T = 0)");
  }

  e_min_ = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= sites; ++n) {
    SectorSpectrum sector;
    sector.basis = std::make_shared<SpinBasis>(sites, n);
    const Eigen::MatrixXd h = dense_sector_hamiltonian(*sector.basis, params, bc);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    sector.energies = es.eigenvalues();
    sector.vectors = es.eigenvectors();
    e_min_ = std::min(e_min_, sector.energies.minCoeff());
    sectors_.push_back(std::move(sector));
  }

  // Boltzmann weights, shifted by the ground energy for stability
  z_shifted_ = 0.0;
  for (const auto& sector : sectors_) {
    for (Eigen::Index i = 0; i < sector.energies.size(); ++i) {
      z_shifted_ += std::exp(-(sector.energies(i) - e_min_) / params.T);
    }
  }
  if (!(z_shifted_ > 0.0)) throw std::runtime_error("ThermalEnsemble: partition function <= 0");
  populations_.reserve(1u << sites);
  for (const auto& sector : sectors_) {
    for (Eigen::Index i = 0; i < sector.energies.size(); ++i) {
      populations_.push_back(std::exp(-(sector.energies(i) - e_min_) / params.T) / z_shifted_);
    }
  }
}

ThermalEnsemble thermal_state(int sites, Boundary bc, const ChainParams& params) {
  return ThermalEnsemble(sites, bc, params);
}

}  // namespace xychain::ed
