#include "xychain/ed/reduced.hpp"

#include <cmath>
#include <stdexcept>

namespace xychain::ed {

namespace {

// standard-basis index {uu=0, ud=1, du=2, dd=3}; a set bit is spin up
int basis_row(int bit_i, int bit_j) { return (1 - bit_i) * 2 + (1 - bit_j); }

void accumulate_pair_rho(Eigen::Matrix4d& rho, const SpinBasis& basis,
                         const std::vector<double>& psi, double weight, int i, int j) {
  const std::size_t dim = basis.dimension();
  for (std::size_t si = 0; si < dim; ++si) {
    const double a = psi[si];
    if (a == 0.0) continue;
    const std::uint32_t s = basis.state(si);
    const int bi = (s >> i) & 1;
    const int bj = (s >> j) & 1;
    const int row = basis_row(bi, bj);
    for (int col = 0; col < 4; ++col) {
      const int bi2 = 1 - (col >> 1);
      const int bj2 = 1 - (col & 1);
      if (bi2 + bj2 != bi + bj) continue;  // other sector: traces to zero
      const std::uint32_t s2 =
          (s & ~(1u << i) & ~(1u << j)) | (static_cast<std::uint32_t>(bi2) << i) |
          (static_cast<std::uint32_t>(bj2) << j);
      rho(row, col) += weight * a * psi[basis.index_of(s2)];
    }
  }
}

void check_pair(int sites, int i, int j) {
  if (i < 0 || j <= i || j >= sites) {
    throw std::invalid_argument("reduced_pair_rho: need 0 <= i < j < N");
  }
}

}  // namespace

PairDensityMatrix reduced_pair_rho(const SpinState& state, int i, int j) {
  check_pair(state.sites, i, j);
  const double n = state.norm();
  if (std::abs(n - 1.0) > 1e-10) {
    throw std::invalid_argument("reduced_pair_rho: state not normalized");
  }
  SpinBasis basis(state.sites, state.n_up);
  PairDensityMatrix out;
  accumulate_pair_rho(out.rho, basis, state.coefficients, 1.0, i, j);
  return out;
}

PairDensityMatrix reduced_pair_rho(const ThermalEnsemble& ensemble, int i, int j) {
  check_pair(ensemble.sites(), i, j);
  PairDensityMatrix out;
  const double t = ensemble.params().T;
  const double e_min = ensemble.minimum_energy();
  const double z = ensemble.shifted_partition_function();
  std::vector<double> psi;
  for (const auto& sector : ensemble.sectors()) {
    const auto dim = static_cast<std::size_t>(sector.energies.size());
    for (std::size_t level = 0; level < dim; ++level) {
      const double weight =
          std::exp(-(sector.energies(static_cast<Eigen::Index>(level)) - e_min) / t) / z;
      if (weight < 1e-18) continue;
      psi.assign(sector.vectors.col(static_cast<Eigen::Index>(level)).data(),
                 sector.vectors.col(static_cast<Eigen::Index>(level)).data() + dim);
      accumulate_pair_rho(out.rho, *sector.basis, psi, weight, i, j);
    }
  }
  return out;
}

SpinCorrelators spin_correlators(const PairDensityMatrix& pdm) {
  const Eigen::Matrix4d& r = pdm.rho;
  SpinCorrelators c;
  c.xx = 0.25 * (r(0, 3) + r(1, 2) + r(2, 1) + r(3, 0));
  c.yy = 0.25 * (-r(0, 3) + r(1, 2) + r(2, 1) - r(3, 0));
  c.zz = 0.25 * (r(0, 0) - r(1, 1) - r(2, 2) + r(3, 3));
  return c;
}

SpinCorrelators spin_correlators(const SpinState& state, int i, int j) {
  return spin_correlators(reduced_pair_rho(state, i, j));
}

SpinCorrelators spin_correlators(const ThermalEnsemble& ensemble, int i, int j) {
  return spin_correlators(reduced_pair_rho(ensemble, i, j));
}

}  // namespace xychain::ed
