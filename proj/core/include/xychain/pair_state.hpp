#pragma once

#include <Eigen/Dense>
#include <array>

#include "xychain/spectrum.hpp"

namespace xychain {

/// The five independent entries of the two-site reduced density matrix of
/// a spin pair at distance m, in fermionic form:
///   x_plus  = <n_i n_j>            x_minus = <(1-n_i)(1-n_j)>
///   y_plus  = <n_i (1-n_j)>        y_minus = <n_j (1-n_i)>
///   z       = <S_i^+ S_j^->  (the string correlator; real in this model)
struct PairElements {
  int m = 0;
  double x_plus = 0.0;
  double y_plus = 0.0;
  double y_minus = 0.0;
  double x_minus = 0.0;
  double z = 0.0;

  double trace() const { return x_plus + y_plus + y_minus + x_minus; }
};

/// 4x4 real symmetric density matrix in the standard basis
/// {uu, ud, du, dd}; nonzero entries are the diagonal and the central
/// off-diagonal pair.
struct PairDensityMatrix {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
};

struct ConcurrenceResult {
  double value = 0.0;                       // max(0, witness), in [0, 1]
  double witness = 0.0;                     // lambda1 - lambda2 - lambda3 - lambda4
  std::array<double, 4> lambdas{};          // sorted descending, non-negative
};

/// Thermodynamic-limit pair elements at distance m from the correlator
/// table. m = 1..4 use the model's explicit Wick polynomials for z;
/// larger m falls back to the general string evaluation. Requires
/// table.n_max >= m.
PairElements density_matrix_elements(int m, const CorrelatorTable& table);

/// z at distance m evaluated by the full Wick contraction sum (Pfaffian of
/// the string's pair-contraction matrix). Agrees with the m = 1..4
/// polynomials to machine precision; valid for any m >= 1.
double z_general(int m, const CorrelatorTable& table);

/// Polynomial z for m = 1..4 as a pure function of the coefficients
/// f_0..f_4 (exposed for algebra-level property tests).
double z_polynomial(int m, const std::array<double, 5>& f);

/// Builds the 4x4 matrix from the elements. Rejects (std::invalid_argument)
/// elements violating trace/positivity invariants beyond 1e-8; diagonal
/// entries in (-1e-10, 0) are clamped to 0.
PairDensityMatrix assemble_rho(const PairElements& elements);

/// Model closed form C = max{0, 2(|z| - sqrt(x+ x-))}. Rejects a negative
/// radicand beyond -1e-12; tiny negatives clamp to 0.
ConcurrenceResult concurrence_closed(const PairElements& elements);

/// General Wootters recipe: lambdas are square roots of the eigenvalues of
/// rho * rho~ with rho~ = (sy x sy) rho* (sy x sy), computed through the
/// equivalent Hermitian form sqrt(rho) rho~ sqrt(rho). Rejects matrices
/// that are non-PSD or trace-deficient beyond 1e-8.
ConcurrenceResult concurrence_wootters(const PairDensityMatrix& rho);

}  // namespace xychain
