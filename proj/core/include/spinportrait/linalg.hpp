#pragma once

#include <complex>

#include <Eigen/Dense>

namespace spinportrait {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

/// Column-stacking vectorization: entry (a, b) of a d x d matrix goes to
/// index a + b * d.
ComplexVector vec(const ComplexMatrix& m);

/// Inverse of `vec` for a square matrix of dimension `dim`.
ComplexMatrix unvec(const ComplexVector& v, int dim);

/// V * diag(values) * V^dagger.
ComplexMatrix conjugate_diagonal(const ComplexMatrix& v,
                                 const RealVector& values);

/// Largest |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |m_ij - conj(m_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

/// Smallest eigenvalue of the Hermitian part of `m`.
double min_eigenvalue(const ComplexMatrix& m);

/// Singular values in decreasing order.
RealVector singular_values(const ComplexMatrix& m);

/// Ratio of extreme singular values; +inf for a rank-deficient matrix.
double condition_number(const ComplexMatrix& m);

/// Number of singular values above `rel_threshold * sigma_max`.
int numerical_rank(const ComplexMatrix& m, double rel_threshold = 1e-8);

}  // namespace spinportrait
