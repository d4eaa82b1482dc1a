#include "xychain/pair_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "xychain/wick.hpp"

namespace xychain {

double z_polynomial(int m, const std::array<double, 5>& f) {
  const double f0 = f[0], f1 = f[1], f2 = f[2], f3 = f[3], f4 = f[4];
  switch (m) {
    case 1:
      return f1;
    case 2:
      return f2 - 2.0 * f0 * f2 + 2.0 * f1 * f1;
    case 3:
      return 4.0 * (f1 * f1 * f1 - 2.0 * f0 * f1 * f2 + f2 * f2 * f1 + f0 * f0 * f3
                    - f1 * f1 * f3 + f1 * f2 - f0 * f3)
             + f3;
    case 4:
      return 8.0 * (f1 * f1 * f1 * f1 - 3.0 * f0 * f1 * f1 * f2
                    + 2.0 * f1 * f1 * f2 * f2 + 2.0 * f0 * f0 * f1 * f3
                    + f0 * f0 * f2 * f2 - f2 * f2 * f2 * f2
                    - 2.0 * f0 * f1 * f2 * f3 + 2.0 * f1 * f2 * f2 * f3
                    - 2.0 * f1 * f1 * f1 * f3 + f1 * f1 * f3 * f3
                    - f0 * f2 * f3 * f3 - f0 * f0 * f0 * f4
                    + 2.0 * f0 * f1 * f1 * f4 - 2.0 * f1 * f1 * f2 * f4
                    + f0 * f2 * f2 * f4)
             + 4.0 * (3.0 * f1 * f1 * f2 - 2.0 * f0 * f2 * f2 - 4.0 * f0 * f1 * f3
                      + 2.0 * f1 * f2 * f3 + 3.0 * f0 * f0 * f4 - 2.0 * f1 * f1 * f4
                      + f2 * f3 * f3 - f2 * f2 * f4)
             + 2.0 * (2.0 * f1 * f3 - 3.0 * f0 * f4 + f2 * f2)
             + f4;
    default:
      throw std::invalid_argument("z_polynomial: m must be 1..4");
  }
}

namespace {

Eigen::MatrixXd toeplitz_contractions(int m, const CorrelatorTable& table) {
  Eigen::MatrixXd g(m + 1, m + 1);
  for (int p = 0; p <= m; ++p) {
    for (int q = 0; q <= m; ++q) {
      g(p, q) = table.at(p - q);
    }
  }
  return g;
}

}  // namespace

double z_general(int m, const CorrelatorTable& table) {
  if (m <= 0) throw std::invalid_argument("z_general: m must be >= 1");
  if (table.n_max < m) throw std::invalid_argument("z_general: table.n_max < m");
  return string_correlator(toeplitz_contractions(m, table), 0, m);
}

PairElements density_matrix_elements(int m, const CorrelatorTable& table) {
  if (m <= 0) throw std::invalid_argument("density_matrix_elements: m must be >= 1");
  if (table.n_max < m) {
    throw std::invalid_argument("density_matrix_elements: table.n_max < m");
  }
  PairElements e;
  e.m = m;
  const double f0 = table.at(0);
  const double fm = table.at(m);
  e.x_plus = f0 * f0 - fm * fm;
  e.x_minus = 1.0 - 2.0 * f0 + e.x_plus;
  e.y_plus = f0 - e.x_plus;
  e.y_minus = e.y_plus;  // translation invariance in the thermodynamic limit
  if (m <= 4) {
    std::array<double, 5> f{};
    for (int n = 0; n <= m; ++n) f[static_cast<std::size_t>(n)] = table.at(n);
    e.z = z_polynomial(m, f);
  } else {
    e.z = z_general(m, table);
  }
  return e;
}

namespace {

constexpr double kClampWindow = 1e-10;  // small negatives set to 0
constexpr double kRejectTol = 1e-8;     // larger violations are hard errors

double clamp_small_negative(double v, const char* what) {
  if (v >= 0.0) return v;
  if (v > -kClampWindow) return 0.0;
  if (v > -kRejectTol) return v;  // tolerated, kept signed
  std::ostringstream msg;
  msg << what << " = " << v << " breaches the -1e-8 tolerance";
  throw std::invalid_argument(msg.str());
}

}  // namespace

PairDensityMatrix assemble_rho(const PairElements& e) {
  const double tr = e.trace();
  if (std::abs(tr - 1.0) > kRejectTol) {
    std::ostringstream msg;
    msg << "assemble_rho: trace " << tr << " deviates from 1 beyond 1e-8";
    throw std::invalid_argument(msg.str());
  }
  const double xp = clamp_small_negative(e.x_plus, "assemble_rho: x_plus");
  const double yp = clamp_small_negative(e.y_plus, "assemble_rho: y_plus");
  const double ym = clamp_small_negative(e.y_minus, "assemble_rho: y_minus");
  const double xm = clamp_small_negative(e.x_minus, "assemble_rho: x_minus");
  // PSD of the central block: |z| <= sqrt(y+ y-)
  if (e.z * e.z > yp * ym + kRejectTol) {
    std::ostringstream msg;
    msg << "assemble_rho: central block not PSD (z = " << e.z << ", y+ = " << yp
        << ", y- = " << ym << ")";
    throw std::invalid_argument(msg.str());
  }
  PairDensityMatrix out;
  out.rho(0, 0) = xp;
  out.rho(1, 1) = yp;
  out.rho(2, 2) = ym;
  out.rho(3, 3) = xm;
  out.rho(1, 2) = e.z;  // Z* = Z: all correlators of the isotropic model are real
  out.rho(2, 1) = e.z;
  return out;
}

ConcurrenceResult concurrence_closed(const PairElements& e) {
  double radicand = e.x_plus * e.x_minus;
  if (radicand < 0.0) {
    if (radicand < -1e-12) {
      throw std::invalid_argument("concurrence_closed: x+ x- < -1e-12");
    }
    radicand = 0.0;
  }
  const double root_x = std::sqrt(radicand);
  const double az = std::abs(e.z);
  ConcurrenceResult r;
  r.witness = 2.0 * (az - root_x);
  r.value = std::max(0.0, r.witness);
  // lambda spectrum of the X-state: {sqrt(y+ y-) +- |z|, sqrt(x+ x-) twice}
  const double root_y = std::sqrt(std::max(e.y_plus * e.y_minus, 0.0));
  r.lambdas = {root_y + az, std::abs(root_y - az), root_x, root_x};
  std::sort(r.lambdas.begin(), r.lambdas.end(), std::greater<double>());
  return r;
}

ConcurrenceResult concurrence_wootters(const PairDensityMatrix& pdm) {
  const Eigen::Matrix4d& rho = pdm.rho;
  if (std::abs(rho.trace() - 1.0) > kRejectTol) {
    throw std::invalid_argument("concurrence_wootters: trace deviates from 1 beyond 1e-8");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho);
  if (es.eigenvalues().minCoeff() < -kRejectTol) {
    throw std::invalid_argument("concurrence_wootters: rho not PSD within 1e-8");
  }
  Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4d sqrt_rho = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();

  Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();  // sigma_y x sigma_y
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const Eigen::Matrix4d rho_tilde = flip * rho * flip;  // rho real here

  // Hermitian form: eigenvalues of sqrt(rho) rho~ sqrt(rho) equal those of rho rho~
  const Eigen::Matrix4d herm = sqrt_rho * rho_tilde * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> er(herm);

  ConcurrenceResult r;
  for (int i = 0; i < 4; ++i) {
    double ev = er.eigenvalues()(i);
    if (ev < 0.0) {
      if (ev < -kClampWindow) {
        throw std::invalid_argument("concurrence_wootters: negative lambda^2 beyond -1e-10");
      }
      ev = 0.0;
    }
    r.lambdas[static_cast<std::size_t>(i)] = std::sqrt(ev);
  }
  std::sort(r.lambdas.begin(), r.lambdas.end(), std::greater<double>());
  r.witness = r.lambdas[0] - r.lambdas[1] - r.lambdas[2] - r.lambdas[3];
  r.value = std::max(0.0, r.witness);
  return r;
}

}  // namespace xychain
