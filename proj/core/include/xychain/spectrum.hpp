#pragma once

#include <vector>

#include "xychain/params.hpp"

namespace xychain {

/// Single-fermion energy eps(k) = J cos(k) - h. k is reduced mod 2*pi
/// if it lies outside [-pi, pi].
double dispersion(double k, const ChainParams& params);

/// Thermal occupation 1/(1 + exp(eps(k)/T)) of mode k, evaluated in the
/// overflow-safe sign-split form. At T = 0 this is the step function with
/// value 1/2 exactly on the Fermi surface.
double fermi_occupation(double k, const ChainParams& params);

/// Fourier coefficient f_n = (1/2pi) \int e^{-ikn} f(k) dk of the Fermi
/// distribution, equal to the real-space contraction <a_i^+ a_{i+n}>.
///
/// T > 0: uniform periodic trapezoid with max(4096, ceil(64 J/T)) points,
/// absolute accuracy ~1e-10 and better (the integrand is smooth and
/// periodic, so the rule is spectrally convergent once the Fermi edge of
/// width O(T) is resolved).
/// T = 0: closed form with k_F = acos(min(h/J, 1)):
///   f_0 = 1 - k_F/pi,  f_n = -sin(n k_F)/(n pi)  (n >= 1).
double fourier_coefficient(int n, const ChainParams& params);

/// Batched f_0..f_{n_max} plus the fermionic contraction accessors that
/// feed every entanglement formula downstream.
struct CorrelatorTable {
  ChainParams params;
  int n_max = 0;
  std::vector<double> f;       // f[n], n = 0..n_max
  int quadrature_points = 0;   // 0 on the closed-form zero-T branch

  double at(int n) const;                    // f_n, |n| <= n_max (f_{-n} = f_n)
  double number_contraction(int n) const;    // <a_i^+ a_{i+n}> = f_n
  double hole_contraction(int n) const;      // <a_i a_{i+n}^+> = delta_{n0} - f_n
  // Anomalous contractions <a a> and <a^+ a^+> vanish identically: the
  // fermionic Hamiltonian has no pairing terms.
};

CorrelatorTable correlator_table(int n_max, const ChainParams& params);

}  // namespace xychain
