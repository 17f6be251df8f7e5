#include "spinportrait/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinportrait/errors.hpp"

namespace spinportrait {

Spin::Spin(int two_j) : two_j_(two_j) {
  if (two_j < 0) {
    throw DomainError("spin: two_j must be nonnegative, got " +
                      std::to_string(two_j));
  }
}

Spin Spin::from_dim(int dim) {
  if (dim < 1) {
    throw DomainError("spin: dimension must be positive, got " +
                      std::to_string(dim));
  }
  return Spin(dim - 1);
}

std::vector<int> Spin::projections() const {
  std::vector<int> out;
  out.reserve(dim());
  for (int two_m = two_j_; two_m >= -two_j_; two_m -= 2) out.push_back(two_m);
  return out;
}

bool Spin::is_projection(int two_m) const noexcept {
  return two_m <= two_j_ && two_m >= -two_j_ && ((two_j_ - two_m) % 2 == 0);
}

int Spin::index_of(int two_m) const {
  if (!is_projection(two_m)) {
    throw DomainError("spin: 2m = " + std::to_string(two_m) +
                      " is not a projection of 2j = " +
                      std::to_string(two_j_));
  }
  return (two_j_ - two_m) / 2;
}

Direction::Direction(double theta, double phi) {
  constexpr double pi = std::numbers::pi;
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw DomainError("direction: angles must be finite");
  }
  if (theta < -1e-12 || theta > pi + 1e-12) {
    throw DomainError("direction: theta outside [0, pi]: " +
                      std::to_string(theta));
  }
  theta_ = std::clamp(theta, 0.0, pi);
  phi_ = std::fmod(phi, 2.0 * pi);
  if (phi_ < 0.0) phi_ += 2.0 * pi;
  if (phi_ >= 2.0 * pi) phi_ = 0.0;
}

Direction Direction::from_cartesian(const Vec3& v) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw DomainError("direction: zero vector");
  const Vec3 u = v / norm;
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  return {theta, phi};
}

Direction Direction::plus_x() { return {std::numbers::pi / 2, 0.0}; }
Direction Direction::plus_y() {
  return {std::numbers::pi / 2, std::numbers::pi / 2};
}

Vec3 Direction::cartesian() const {
  const double st = std::sin(theta_);
  return {std::cos(phi_) * st, std::sin(phi_) * st, std::cos(theta_)};
}

bool HermitianOp::is_hermitian(double tol) const {
  return mat.rows() == mat.cols() && hermiticity_defect(mat) <= tol;
}

UnitaryOp UnitaryOp::identity(int dim) {
  return UnitaryOp(ComplexMatrix::Identity(dim, dim));
}

bool UnitaryOp::is_unitary(double tol) const {
  if (mat.rows() != mat.cols()) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(mat.rows(), mat.cols());
  return max_abs_diff(mat.adjoint() * mat, id) <= tol;
}

DensityMatrix DensityMatrix::from_matrix(Spin spin, ComplexMatrix m,
                                         double trace_tol, double eigen_tol) {
  if (m.rows() != spin.dim() || m.cols() != spin.dim()) {
    throw InvariantError("density matrix: expected " +
                         std::to_string(spin.dim()) + "x" +
                         std::to_string(spin.dim()) + " matrix");
  }
  const double herm = hermiticity_defect(m);
  if (herm > std::max(1e-12, trace_tol)) {
    throw InvariantError("density matrix: not Hermitian (defect " +
                         std::to_string(herm) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > trace_tol) {
    throw InvariantError("density matrix: trace " + std::to_string(tr.real()) +
                         (tr.imag() != 0.0
                              ? "+" + std::to_string(tr.imag()) + "i"
                              : std::string()) +
                         " differs from 1");
  }
  const double lmin = min_eigenvalue(m);
  if (lmin < -eigen_tol) {
    throw InvariantError("density matrix: minimum eigenvalue " +
                         std::to_string(lmin) + " is negative");
  }
  return DensityMatrix(spin, std::move(m));
}

DensityMatrix DensityMatrix::unchecked(Spin spin, ComplexMatrix m) {
  if (m.rows() != spin.dim() || m.cols() != spin.dim()) {
    throw DomainError("density matrix: dimension does not match spin");
  }
  return DensityMatrix(spin, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(Spin spin) {
  const int d = spin.dim();
  return DensityMatrix(spin, ComplexMatrix::Identity(d, d) / double(d));
}

DensityMatrix DensityMatrix::pure(Spin spin, const ComplexVector& psi) {
  if (psi.size() != spin.dim()) {
    throw DomainError("density matrix: state vector has wrong dimension");
  }
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw DomainError("density matrix: zero state vector");
  return DensityMatrix(spin, psi * psi.adjoint() / n2);
}

ComplexMatrix AngularMomentum::along(const Vec3& n) const {
  return n.x() * jx.mat + n.y() * jy.mat + n.z() * jz.mat;
}

AngularMomentum angular_momentum(Spin spin) {
  const int d = spin.dim();
  const double j = spin.j();
  ComplexMatrix jz = ComplexMatrix::Zero(d, d);
  ComplexMatrix jplus = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = spin.m_at(i);
    jz(i, i) = m;
    // J+ raises m: column i (projection m) feeds row i-1 (projection m+1).
    if (i > 0) jplus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix jminus = jplus.adjoint();
  AngularMomentum out;
  out.jx = HermitianOp((jplus + jminus) * 0.5);
  out.jy = HermitianOp((jplus - jminus) / Complex(0.0, 2.0));
  out.jz = HermitianOp(jz);
  return out;
}

UnitaryOp rotation(Spin spin, const Direction& n) {
  const int d = spin.dim();
  if (n.theta() == 0.0) return UnitaryOp::identity(d);
  const AngularMomentum am = angular_momentum(spin);
  const ComplexMatrix generator =
      -std::sin(n.phi()) * am.jx.mat + std::cos(n.phi()) * am.jy.mat;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(generator);
  const ComplexMatrix& v = es.eigenvectors();
  ComplexVector phases(d);
  for (int i = 0; i < d; ++i) {
    phases(i) = std::exp(Complex(0.0, -n.theta() * es.eigenvalues()(i)));
  }
  return UnitaryOp(v * phases.asDiagonal() * v.adjoint());
}

UnitaryOp frame_unitary(Spin spin, const Frame& frame) {
  if (const auto* dir = std::get_if<Direction>(&frame)) {
    return rotation(spin, *dir);
  }
  const auto& u = std::get<UnitaryOp>(frame);
  if (u.dim() != spin.dim() || u.mat.cols() != spin.dim()) {
    throw DomainError("frame: unitary dimension " + std::to_string(u.dim()) +
                      " does not match spin dimension " +
                      std::to_string(spin.dim()));
  }
  return u;
}

}  // namespace spinportrait
