#pragma once

#include <cmath>
#include <stdexcept>

namespace xychain {

inline constexpr const char* kVersion = "1.0.0";

/// Physical control space of the chain: exchange coupling J > 0 (energy
/// units), magnetic field h >= 0 and temperature T >= 0 with k_B = 1.
/// T = 0 selects closed-form zero-temperature branches throughout.
struct ChainParams {
  double J = 1.0;
  double h = 0.0;
  double T = 0.0;

  bool valid() const {
    return std::isfinite(J) && std::isfinite(h) && std::isfinite(T) &&
           J > 0.0 && h >= 0.0 && T >= 0.0;
  }

  /// Throws std::invalid_argument if the parameters are outside the
  /// supported domain (J > 0, h >= 0, T >= 0, all finite).
  void require() const {
    if (!valid()) {
      throw std::invalid_argument("ChainParams: need finite J > 0, h >= 0, T >= 0");
    }
  }

  bool zero_temperature() const { return T == 0.0; }

  // Saturation field of the isotropic chain; derived, never stored.
  double critical_field() const { return J; }

  double beta() const { return 1.0 / T; }
};

}  // namespace xychain
