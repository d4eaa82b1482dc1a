#include "xychain/ed/free_fermion.hpp"

#include <cmath>
#include <stdexcept>

#include "xychain/wick.hpp"

namespace xychain::ed {

namespace {

double fermi_factor(double energy, double temperature) {
  if (temperature == 0.0) {
    if (energy < 0.0) return 1.0;
    if (energy > 0.0) return 0.0;
    return 0.5;
  }
  const double x = energy / temperature;
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

}  // namespace

FreeFermionChain::FreeFermionChain(int sites, const ChainParams& params, Boundary bc)
    : sites_(sites), params_(params) {
  params.require();
  if (sites < 2) throw std::invalid_argument("FreeFermionChain: sites must be >= 2");
  if (bc != Boundary::open) {
    throw std::invalid_argument(
        "FreeFermionChain: periodic bc carries a fermion-parity boundary term; "
        "use the spin-language ED instead");
  }
  Eigen::MatrixXd hopping = Eigen::MatrixXd::Zero(sites, sites);
  for (int l = 0; l + 1 < sites; ++l) {
    hopping(l, l + 1) = 0.5 * params.J;
    hopping(l + 1, l) = 0.5 * params.J;
  }
  hopping.diagonal().setConstant(-params.h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hopping);
  energies_ = es.eigenvalues();
  modes_ = es.eigenvectors();
  occupations_.resize(sites);
  for (int q = 0; q < sites; ++q) {
    occupations_(q) = fermi_factor(energies_(q), params.T);
  }
}

double FreeFermionChain::contraction(int i, int j) const {
  if (i < 0 || j < 0 || i >= sites_ || j >= sites_) {
    throw std::invalid_argument("FreeFermionChain: site out of range");
  }
  double g = 0.0;
  for (int q = 0; q < sites_; ++q) {
    g += occupations_(q) * modes_(i, q) * modes_(j, q);
  }
  return g;
}

PairElements FreeFermionChain::pair_elements(int i, int j) const {
  if (i < 0 || j <= i || j >= sites_) {
    throw std::invalid_argument("FreeFermionChain: need 0 <= i < j < N");
  }
  // local contraction window [i..j]; the string only touches these sites
  const int span = j - i + 1;
  Eigen::MatrixXd g(span, span);
  for (int p = 0; p < span; ++p) {
    for (int q = p; q < span; ++q) {
      g(p, q) = contraction(i + p, i + q);
      g(q, p) = g(p, q);
    }
  }
  PairElements e;
  e.m = j - i;
  const double ni = g(0, 0);
  const double nj = g(span - 1, span - 1);
  e.x_plus = ni * nj - g(0, span - 1) * g(0, span - 1);
  e.y_plus = ni - e.x_plus;
  e.y_minus = nj - e.x_plus;
  e.x_minus = 1.0 - ni - nj + e.x_plus;
  e.z = string_correlator(g, 0, span - 1);
  return e;
}

std::vector<PairElements> FreeFermionChain::central_pairs(int m_max) const {
  std::vector<PairElements> out;
  out.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    const int i = (sites_ - m) / 2;
    out.push_back(pair_elements(i, i + m));
  }
  return out;
}

std::vector<PairElements> free_fermion_finite(int sites, const ChainParams& params,
                                              Boundary bc) {
  return FreeFermionChain(sites, params, bc).central_pairs(4);
}

}  // namespace xychain::ed
