#include "xychain/ed/basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace xychain::ed {

SpinBasis::SpinBasis(int sites, int n_up) : sites_(sites), n_up_(n_up) {
  if (sites < 1 || sites > 30) throw std::invalid_argument("SpinBasis: sites must be 1..30");
  if (n_up < 0 || n_up > sites) throw std::invalid_argument("SpinBasis: n_up out of range");
  states_.reserve(sector_dimension(sites, n_up));
  const std::uint32_t limit = sites == 32 ? 0 : (1u << sites);
  if (n_up == 0) {
    states_.push_back(0);
    return;
  }
  // enumerate patterns with fixed popcount in ascending order (Gosper's hack)
  std::uint32_t v = (1u << n_up) - 1;
  while (v < limit) {
    states_.push_back(v);
    const std::uint32_t t = v | (v - 1);
    const std::uint32_t next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v) break;
    v = next;
  }
}

std::size_t SpinBasis::index_of(std::uint32_t state) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), state);
  if (it == states_.end() || *it != state) {
    throw std::out_of_range("SpinBasis: state not in sector");
  }
  return static_cast<std::size_t>(it - states_.begin());
}

bool SpinBasis::contains(std::uint32_t state) const {
  return std::binary_search(states_.begin(), states_.end(), state);
}

std::size_t SpinBasis::sector_dimension(int sites, int n_up) {
  if (n_up < 0 || n_up > sites) return 0;
  // binomial via the multiplicative form; safe for sites <= 30
  std::size_t result = 1;
  const int k = std::min(n_up, sites - n_up);
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::size_t>(sites - k + i) / static_cast<std::size_t>(i);
  }
  return result;
}

}  // namespace xychain::ed
