#include "xychain/ed/zero_t_sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "xychain/ed/reduced.hpp"

namespace xychain::ed {

ZeroTemperatureSweep::ZeroTemperatureSweep(int sites, Boundary bc, double coupling,
                                           int distance, const LanczosOptions& options)
    : sites_(sites), bc_(bc), coupling_(coupling), distance_(distance) {
  if (sites < 4 || sites > 24) {
    throw std::invalid_argument("ZeroTemperatureSweep: sites must be 4..24");
  }
  if (distance < 1 || distance >= sites) {
    throw std::invalid_argument("ZeroTemperatureSweep: bad pair distance");
  }
  ChainParams xx;
  xx.J = coupling;
  xx.h = 0.0;
  xx.T = 0.0;
  xx.require();

  first_sector_ = (sites + 1) / 2;
  const int i0 = bc == Boundary::periodic ? 0 : (sites - distance) / 2;

  for (int n = first_sector_; n <= sites; ++n) {
    SpinBasis basis(sites, n);
    auto eig = lowest_eigenpair(basis, xx, bc, options);
    if (!eig.converged) {
      throw std::runtime_error("ZeroTemperatureSweep: Lanczos failed in sector " +
                               std::to_string(n));
    }
    xx_energy_.push_back(eig.e0);
    xx_gap_.push_back(eig.e1 - eig.e0);

    SpinState state;
    state.sites = sites;
    state.bc = bc;
    state.n_up = n;
    state.coefficients = std::move(eig.ground);
    state.energy = eig.e0;
    const auto rho = reduced_pair_rho(state, i0, i0 + distance);
    concurrence_.push_back(concurrence_wootters(rho).value);
  }

  // winner switches from sector n to n+1 at h = E0(n+1) - E0(n); the XX
  // sector energies are convex in n, so the crossings ascend
  for (std::size_t k = 0; k + 1 < xx_energy_.size(); ++k) {
    crossings_.push_back(xx_energy_[k + 1] - xx_energy_[k]);
  }
}

int ZeroTemperatureSweep::winning_sector(double h) const {
  if (!(h >= 0.0)) throw std::invalid_argument("ZeroTemperatureSweep: h must be >= 0");
  int best = first_sector_;
  double best_e = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < xx_energy_.size(); ++k) {
    const int n = first_sector_ + static_cast<int>(k);
    const double e = xx_energy_[k] - h * (n - 0.5 * sites_);
    if (e < best_e) {
      best_e = e;
      best = n;
    }
  }
  return best;
}

double ZeroTemperatureSweep::ground_energy(double h) const {
  const int n = winning_sector(h);
  return xx_energy_[static_cast<std::size_t>(n - first_sector_)] - h * (n - 0.5 * sites_);
}

double ZeroTemperatureSweep::concurrence(double h) const {
  return concurrence_[static_cast<std::size_t>(winning_sector(h) - first_sector_)];
}

double ZeroTemperatureSweep::crossing_distance(double h) const {
  double d = std::numeric_limits<double>::infinity();
  for (double c : crossings_) d = std::min(d, std::abs(h - c));
  return d;
}

double ZeroTemperatureSweep::sector_gap(double h) const {
  return xx_gap_[static_cast<std::size_t>(winning_sector(h) - first_sector_)];
}

}  // namespace xychain::ed
