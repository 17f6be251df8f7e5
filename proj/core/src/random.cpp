#include "spinportrait/random.hpp"

#include <cmath>
#include <numbers>

namespace spinportrait {

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

UnitaryOp haar_unitary(int dim, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return UnitaryOp(std::move(q));
}

Direction random_direction(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double z = 2.0 * unit(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  return Direction(std::acos(z), phi);
}

ComplexVector random_state_vector(int dim, Rng& rng) {
  ComplexVector v = gaussian_matrix(dim, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density_matrix(Spin spin, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(spin.dim(), spin.dim(), rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::from_matrix(spin, std::move(rho));
}

DensityMatrix random_pure_state(Spin spin, Rng& rng) {
  return DensityMatrix::pure(spin, random_state_vector(spin.dim(), rng));
}

}  // namespace spinportrait
