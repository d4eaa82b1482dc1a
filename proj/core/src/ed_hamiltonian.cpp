#include "xychain/ed/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "xychain/threading.hpp"

namespace xychain::ed {

double SpinState::norm() const {
  double s = 0.0;
  for (double c : coefficients) s += c * c;
  return std::sqrt(s);
}

std::vector<std::pair<int, int>> chain_bonds(int sites, Boundary bc) {
  std::vector<std::pair<int, int>> bonds;
  bonds.reserve(static_cast<std::size_t>(sites));
  for (int l = 0; l + 1 < sites; ++l) bonds.emplace_back(l, l + 1);
  if (bc == Boundary::periodic && sites > 2) bonds.emplace_back(sites - 1, 0);
  return bonds;
}

void apply_hamiltonian(const SpinBasis& basis, const ChainParams& params, Boundary bc,
                       std::span<const double> in, std::span<double> out) {
  const std::size_t dim = basis.dimension();
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("apply_hamiltonian: dimension mismatch");
  }
  const double hop = 0.5 * params.J;
  const double diag = -params.h * (basis.n_up() - 0.5 * basis.sites());
  const auto bonds = chain_bonds(basis.sites(), bc);

  // gather form: H is symmetric, so each output row collects the same hop
  // amplitudes it would scatter; rows are written disjointly, which keeps
  // threaded evaluation deterministic
  auto row = [&](std::size_t idx) {
    const std::uint32_t s = basis.state(idx);
    double acc = diag * in[idx];
    for (const auto& [a, b] : bonds) {
      const std::uint32_t mask = (1u << a) | (1u << b);
      const std::uint32_t bits = s & mask;
      if (bits == 0 || bits == mask) continue;  // equal spins: no hop
      acc += hop * in[basis.index_of(s ^ mask)];
    }
    out[idx] = acc;
  };
  if (dim >= (1u << 14)) {
    parallel_for(dim, 0, row);
  } else {
    for (std::size_t idx = 0; idx < dim; ++idx) row(idx);
  }
}

SpinState apply_hamiltonian(const SpinState& state, const ChainParams& params, Boundary bc) {
  SpinBasis basis(state.sites, state.n_up);
  SpinState result = state;
  result.coefficients.assign(state.coefficients.size(), 0.0);
  apply_hamiltonian(basis, params, bc, state.coefficients, result.coefficients);
  return result;
}

}  // namespace xychain::ed
