#pragma once

#include <Eigen/Dense>

namespace xychain {

/// Pfaffian of an even-dimensional antisymmetric matrix, computed by
/// skew-symmetric Gaussian elimination with partial pivoting (Parlett-Reid
/// style congruence updates). Exact up to rounding for the small matrices
/// used here. The argument is taken by value because the elimination is
/// destructive. Returns 0 for odd dimension.
double pfaffian(Eigen::MatrixXd a);

/// Wick evaluation of the Jordan-Wigner string expectation
///
///   <a_i^+ (1-2n_{i+1})(1-2n_{i+2})...(1-2n_{j-1}) a_j>,   i < j,
///
/// for any number-conserving Gaussian state described by its contraction
/// matrix g(p, q) = <a_p^+ a_q> (real symmetric, anomalous terms zero).
///
/// Each string factor is written as 1-2n_l = A_l B_l with A_l = a_l^+ + a_l
/// and B_l = a_l^+ - a_l; the expectation of the ordered operator list
/// {a_i^+, A_{i+1}, B_{i+1}, ..., A_{j-1}, B_{j-1}, a_j} is then the
/// Pfaffian of its pair-contraction matrix:
///
///   <a_i^+ A_l> =  g(i,l)      <A_l A_l'> = 0          <A_l a_j> = g(l,j)
///   <a_i^+ B_l> = -g(i,l)      <B_l B_l'> = 0          <B_l a_j> = g(l,j)
///   <a_i^+ a_j> =  g(i,j)      <A_l B_l'> = delta - 2 g(l,l')
///
/// The rows of `g` must cover the site range [i, j].
double string_correlator(const Eigen::MatrixXd& g, int i, int j);

}  // namespace xychain
