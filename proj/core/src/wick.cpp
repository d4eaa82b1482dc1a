#include "xychain/wick.hpp"

#include <cmath>
#include <stdexcept>

namespace xychain {

double pfaffian(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("pfaffian: matrix must be square");
  if (n == 0) return 1.0;
  if (n % 2 != 0) return 0.0;

  double result = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // pivot: largest |a(k, p)| over p > k
    Eigen::Index p = k + 1;
    double best = std::abs(a(k, k + 1));
    for (Eigen::Index j = k + 2; j < n; ++j) {
      if (std::abs(a(k, j)) > best) {
        best = std::abs(a(k, j));
        p = j;
      }
    }
    if (best == 0.0) return 0.0;
    if (p != k + 1) {
      a.row(k + 1).swap(a.row(p));
      a.col(k + 1).swap(a.col(p));
      result = -result;
    }
    const double piv = a(k, k + 1);
    result *= piv;
    if (k + 2 >= n) break;
    // congruence update: Pf([[0, piv, b^T], [-piv, 0, c^T], [-b, -c, D]])
    //                  = piv * Pf(D + (c b^T - b c^T)/piv)
    const auto b = a.row(k).segment(k + 2, n - k - 2);
    const auto c = a.row(k + 1).segment(k + 2, n - k - 2);
    a.bottomRightCorner(n - k - 2, n - k - 2) +=
        (c.transpose() * b - b.transpose() * c) / piv;
  }
  return result;
}

double string_correlator(const Eigen::MatrixXd& g, int i, int j) {
  if (i < 0 || j <= i || j >= g.rows()) {
    throw std::invalid_argument("string_correlator: need 0 <= i < j within g");
  }
  const int m = j - i;
  if (m == 1) return g(i, j);

  // ordered operator list: a_i^+, {A_l, B_l} for l = i+1..j-1, a_j
  const int n = 2 * m;
  Eigen::MatrixXd pair = Eigen::MatrixXd::Zero(n, n);
  auto set = [&pair](int p, int q, double v) {
    pair(p, q) = v;
    pair(q, p) = -v;
  };
  for (int t = 0; t < m - 1; ++t) {
    const int l = i + 1 + t;
    set(0, 2 * t + 1, g(i, l));   // <a_i^+ A_l>
    set(0, 2 * t + 2, -g(i, l));  // <a_i^+ B_l>
    set(2 * t + 1, 2 * t + 2, 1.0 - 2.0 * g(l, l));
    set(2 * t + 1, n - 1, g(l, j));
    set(2 * t + 2, n - 1, g(l, j));
    for (int u = t + 1; u < m - 1; ++u) {
      const int lp = i + 1 + u;
      set(2 * t + 1, 2 * u + 2, -2.0 * g(l, lp));  // <A_l B_l'>
      set(2 * t + 2, 2 * u + 1, 2.0 * g(l, lp));   // <B_l A_l'>
    }
  }
  set(0, n - 1, g(i, j));
  return pfaffian(std::move(pair));
}

}  // namespace xychain
