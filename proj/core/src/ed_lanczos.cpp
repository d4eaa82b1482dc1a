#include "xychain/ed/lanczos.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace xychain::ed {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::vector<double>& x) {
  for (double& v : x) v *= alpha;
}

// Eigen-decomposition of the k x k Lanczos tridiagonal.
struct TridiagEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

TridiagEigen solve_tridiagonal(const std::vector<double>& alpha,
                               const std::vector<double>& beta, int k) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    t(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < k) {
      t(i, i + 1) = beta[static_cast<std::size_t>(i)];
      t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<double> deterministic_start(std::size_t dim, unsigned seed, int n_up) {
  // per-sector stream so different sectors never share a start vector
  std::mt19937 rng(seed + 0x9e3779b9u * static_cast<unsigned>(n_up + 1));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  double norm2 = 0.0;
  for (double& x : v) {
    x = gauss(rng);
    norm2 += x * x;
  }
  scale(1.0 / std::sqrt(norm2), v);
  return v;
}

}  // namespace

SectorEigenResult lowest_eigenpair(const SpinBasis& basis, const ChainParams& params,
                                   Boundary bc, const LanczosOptions& options) {
  params.require();
  const std::size_t dim = basis.dimension();
  SectorEigenResult result;
  if (dim == 0) throw std::invalid_argument("lowest_eigenpair: empty sector");
  if (dim == 1) {
    // single-state sector: the diagonal is the eigenvalue
    std::vector<double> unit{1.0};
    std::vector<double> image(1, 0.0);
    apply_hamiltonian(basis, params, bc, unit, image);
    result.e0 = image[0];
    result.e1 = std::numeric_limits<double>::infinity();
    result.ground = std::move(unit);
    result.converged = true;
    return result;
  }

  const int max_iter = static_cast<int>(
      std::min<std::size_t>(dim, static_cast<std::size_t>(options.max_iterations)));
  std::vector<std::vector<double>> krylov;  // kept for full reorthogonalization
  krylov.reserve(static_cast<std::size_t>(max_iter));
  krylov.push_back(deterministic_start(dim, options.seed, basis.n_up()));

  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> w(dim);
  TridiagEigen eigen;
  int k = 0;
  bool exhausted = false;

  while (k < max_iter) {
    apply_hamiltonian(basis, params, bc, krylov.back(), w);
    alpha.push_back(dot(krylov.back(), w));
    // full reorthogonalization, two sweeps
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& q : krylov) axpy(-dot(q, w), q, w);
    }
    ++k;
    eigen = solve_tridiagonal(alpha, beta, k);
    result.ritz_history.push_back(eigen.values(0));

    const double b = std::sqrt(dot(w, w));
    const double ritz_residual = b * std::abs(eigen.vectors(k - 1, 0));
    if (b < 1e-13) {
      exhausted = true;  // exact invariant subspace
      result.converged = true;
      break;
    }
    if (k >= 2 && ritz_residual <= options.residual_tolerance) {
      result.converged = true;
      break;
    }
    beta.push_back(b);
    scale(1.0 / b, w);
    krylov.push_back(w);
  }
  (void)exhausted;

  result.iterations = k;
  result.e0 = eigen.values(0);
  result.e1 = k >= 2 ? eigen.values(1) : std::numeric_limits<double>::infinity();

  // assemble the Ritz vector and measure the true residual
  result.ground.assign(dim, 0.0);
  for (int j = 0; j < k; ++j) {
    axpy(eigen.vectors(j, 0), krylov[static_cast<std::size_t>(j)], result.ground);
  }
  const double gnorm = std::sqrt(dot(result.ground, result.ground));
  scale(1.0 / gnorm, result.ground);
  apply_hamiltonian(basis, params, bc, result.ground, w);
  axpy(-result.e0, result.ground, w);
  result.residual = std::sqrt(dot(w, w));
  if (result.residual > 10.0 * options.residual_tolerance) result.converged = false;
  return result;
}

GroundStateResult ground_state(int sites, Boundary bc, const ChainParams& params,
                               const LanczosOptions& options) {
  params.require();
  if (sites < 2 || sites > 24) {
    throw std::invalid_argument("ground_state: sites must be 2..24");
  }

  // The field term is constant within a sector and E0_XX(n) = E0_XX(N-n),
  // so only sectors n_up >= N/2 can win at h >= 0; mirror energies are
  // derived for the gap bookkeeping.
  const int first = (sites + 1) / 2;
  std::vector<SectorEigenResult> solved(static_cast<std::size_t>(sites + 1));
  ChainParams xx = params;
  xx.h = 0.0;

  double best_energy = std::numeric_limits<double>::infinity();
  int best_sector = -1;
  for (int n = first; n <= sites; ++n) {
    SpinBasis basis(sites, n);
    solved[static_cast<std::size_t>(n)] = lowest_eigenpair(basis, xx, bc, options);
    if (!solved[static_cast<std::size_t>(n)].converged) {
      throw std::runtime_error("ground_state: Lanczos failed to converge in sector n_up=" +
                               std::to_string(n));
    }
    const double field_shift = -params.h * (n - 0.5 * sites);
    const double e = solved[static_cast<std::size_t>(n)].e0 + field_shift;
    if (e < best_energy) {
      best_energy = e;
      best_sector = n;
    }
  }

  // gap: nearest competitor among other sectors' e0 (mirrors included) and
  // the winning sector's own e1
  double runner_up = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= sites; ++n) {
    const int source = n >= first ? n : sites - n;  // mirror spectrum
    if (source < first) continue;
    const auto& sec = solved[static_cast<std::size_t>(source)];
    if (sec.ground.empty()) continue;
    const double field_shift = -params.h * (n - 0.5 * sites);
    const double e0 = sec.e0 + field_shift;
    if (n != best_sector) {
      runner_up = std::min(runner_up, e0);
    } else if (std::isfinite(sec.e1)) {
      runner_up = std::min(runner_up, sec.e1 + field_shift);
    }
  }

  GroundStateResult out;
  out.state.sites = sites;
  out.state.bc = bc;
  out.state.n_up = best_sector;
  out.state.coefficients = solved[static_cast<std::size_t>(best_sector)].ground;
  out.state.energy = best_energy;
  out.residual = solved[static_cast<std::size_t>(best_sector)].residual;
  out.gap = runner_up - best_energy;
  out.near_degenerate = out.gap < 1e-8;
  return out;
}

}  // namespace xychain::ed
