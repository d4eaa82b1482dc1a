#pragma once

#include <cstdint>
#include <vector>

namespace xychain::ed {

enum class Boundary { open, periodic };

inline const char* to_string(Boundary bc) {
  return bc == Boundary::open ? "open" : "periodic";
}

/// Bit-pattern basis of one total-S^z sector of an N-site spin-1/2 chain.
/// Bit l set means spin up (Jordan-Wigner fermion present) at site l.
/// The Hamiltonian conserves total S^z, so matvecs never leave a sector.
class SpinBasis {
 public:
  SpinBasis(int sites, int n_up);

  int sites() const { return sites_; }
  int n_up() const { return n_up_; }
  std::size_t dimension() const { return states_.size(); }
  std::uint32_t state(std::size_t index) const { return states_[index]; }

  /// Position of a bit pattern in the sorted state list; the pattern must
  /// belong to the sector.
  std::size_t index_of(std::uint32_t state) const;
  bool contains(std::uint32_t state) const;

  /// binomial(N, n_up), the sector dimension.
  static std::size_t sector_dimension(int sites, int n_up);

 private:
  int sites_;
  int n_up_;
  std::vector<std::uint32_t> states_;  // ascending
};

}  // namespace xychain::ed
