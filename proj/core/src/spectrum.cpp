#include "xychain/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xychain {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double dispersion(double k, const ChainParams& params) {
  if (!std::isfinite(k)) throw std::invalid_argument("dispersion: k must be finite");
  if (k > kPi || k < -kPi) k = std::remainder(k, kTwoPi);
  return params.J * std::cos(k) - params.h;
}

double fermi_occupation(double k, const ChainParams& params) {
  params.require();
  const double eps = dispersion(k, params);
  if (params.zero_temperature()) {
    if (eps < 0.0) return 1.0;
    if (eps > 0.0) return 0.0;
    return 0.5;  // measure-zero Fermi surface point
  }
  const double x = eps / params.T;
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

namespace {

int quadrature_point_count(const ChainParams& params) {
  const double scaled = 64.0 * params.J / params.T;
  double m = std::max(4096.0, std::ceil(scaled));
  // keep the grid symmetric under k -> -k
  long long mi = static_cast<long long>(m);
  if (mi % 2 != 0) ++mi;
  return static_cast<int>(mi);
}

double fourier_zero_t(int n, const ChainParams& params) {
  const double ratio = std::min(params.h / params.J, 1.0);
  const double kf = std::acos(ratio);
  if (n == 0) return 1.0 - kf / kPi;
  return -std::sin(n * kf) / (n * kPi);
}

double fourier_finite_t(int n, const ChainParams& params, int* points_out) {
  const int m = quadrature_point_count(params);
  if (points_out) *points_out = m;
  // periodic trapezoid over the full Brillouin zone; the integrand is even
  // in k, so the imaginary part of e^{-ikn} f(k) cancels exactly
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const double k = -kPi + kTwoPi * j / m;
    sum += std::cos(n * k) * fermi_occupation(k, params);
  }
  return sum / m;
}

}  // namespace

double fourier_coefficient(int n, const ChainParams& params) {
  params.require();
  if (n < 0) throw std::invalid_argument("fourier_coefficient: n must be >= 0");
  if (params.zero_temperature()) return fourier_zero_t(n, params);
  return fourier_finite_t(n, params, nullptr);
}

double CorrelatorTable::at(int n) const {
  const int a = n < 0 ? -n : n;  // f_{-n} = f_n
  if (a > n_max) throw std::out_of_range("CorrelatorTable: |n| > n_max");
  return f[static_cast<std::size_t>(a)];
}

double CorrelatorTable::number_contraction(int n) const { return at(n); }

double CorrelatorTable::hole_contraction(int n) const {
  return (n == 0 ? 1.0 : 0.0) - at(n);
}

CorrelatorTable correlator_table(int n_max, const ChainParams& params) {
  params.require();
  if (n_max < 0) throw std::invalid_argument("correlator_table: n_max must be >= 0");
  CorrelatorTable table;
  table.params = params;
  table.n_max = n_max;
  table.f.resize(static_cast<std::size_t>(n_max) + 1);
  int points = 0;
  for (int n = 0; n <= n_max; ++n) {
    table.f[static_cast<std::size_t>(n)] =
        params.zero_temperature() ? fourier_zero_t(n, params)
                                  : fourier_finite_t(n, params, &points);
  }
  table.quadrature_points = points;
  return table;
}

}  // namespace xychain
