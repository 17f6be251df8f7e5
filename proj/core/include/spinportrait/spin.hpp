#pragma once

#include <variant>
#include <vector>

#include "spinportrait/linalg.hpp"

namespace spinportrait {

/// Spin quantum number stored doubled, so j = two_j / 2 and every projection
/// m is addressed by the integer two_m. Basis states are ordered by
/// descending projection: index 0 is |j, j>, index 2j is |j, -j>.
class Spin {
 public:
  explicit Spin(int two_j);

  static Spin from_dim(int dim);

  int two_j() const noexcept { return two_j_; }
  double j() const noexcept { return 0.5 * two_j_; }
  int dim() const noexcept { return two_j_ + 1; }

  /// 4j + 1, the number of SU(2) directions the probability vector needs.
  int direction_count() const noexcept { return 2 * two_j_ + 1; }

  /// Doubled projections {2j, 2j - 2, ..., -2j}.
  std::vector<int> projections() const;

  /// Basis index of the doubled projection `two_m`; throws DomainError when
  /// `two_m` is not a projection of this spin.
  int index_of(int two_m) const;
  bool is_projection(int two_m) const noexcept;

  int two_m_at(int index) const noexcept { return two_j_ - 2 * index; }
  double m_at(int index) const noexcept { return 0.5 * two_m_at(index); }

  friend bool operator==(const Spin&, const Spin&) = default;

 private:
  int two_j_;
};

/// Unit vector n(theta, phi) = (cos phi sin theta, sin phi sin theta, cos theta).
class Direction {
 public:
  /// theta must lie in [0, pi] (a 1e-12 overshoot is clamped); phi is
  /// wrapped into [0, 2 pi).
  Direction(double theta, double phi);

  /// Normalizes `v`; throws DomainError for the zero vector.
  static Direction from_cartesian(const Vec3& v);
  static Direction plus_z() { return {0.0, 0.0}; }
  static Direction plus_x();
  static Direction plus_y();

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  Vec3 cartesian() const;

 private:
  double theta_;
  double phi_;
};

struct HermitianOp {
  ComplexMatrix mat;

  HermitianOp() = default;
  explicit HermitianOp(ComplexMatrix m) : mat(std::move(m)) {}

  int dim() const noexcept { return static_cast<int>(mat.rows()); }
  bool is_hermitian(double tol = 1e-12) const;
};

struct UnitaryOp {
  ComplexMatrix mat;

  UnitaryOp() = default;
  explicit UnitaryOp(ComplexMatrix m) : mat(std::move(m)) {}

  static UnitaryOp identity(int dim);

  int dim() const noexcept { return static_cast<int>(mat.rows()); }
  /// max |(U^dagger U - I)_ab| <= tol.
  bool is_unitary(double tol = 1e-12) const;
};

/// A measurement frame: either a spatial direction (acting through the spin
/// rotation R(n)) or an arbitrary unitary on the (2j+1)-dimensional space.
using Frame = std::variant<Direction, UnitaryOp>;

/// Hermitian, unit-trace, positive semidefinite operator of a spin.
class DensityMatrix {
 public:
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenTol = 1e-10;

  /// Validates hermiticity, trace and positivity; throws InvariantError.
  static DensityMatrix from_matrix(Spin spin, ComplexMatrix m,
                                   double trace_tol = kTraceTol,
                                   double eigen_tol = kEigenTol);
  /// Skips validation (used when a caller explicitly opts out).
  static DensityMatrix unchecked(Spin spin, ComplexMatrix m);
  static DensityMatrix maximally_mixed(Spin spin);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(Spin spin, const ComplexVector& psi);

  const Spin& spin() const noexcept { return spin_; }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  HermitianOp op() const { return HermitianOp(mat_); }

 private:
  DensityMatrix(Spin spin, ComplexMatrix m)
      : spin_(spin), mat_(std::move(m)) {}

  Spin spin_;
  ComplexMatrix mat_;
};

struct AngularMomentum {
  HermitianOp jx;
  HermitianOp jy;
  HermitianOp jz;

  /// J . n for a Cartesian vector n.
  ComplexMatrix along(const Vec3& n) const;
};

/// Jx, Jy, Jz in the descending-m basis from the ladder matrix elements
/// <j, m+1| J+ |j, m> = sqrt(j(j+1) - m(m+1)).
AngularMomentum angular_momentum(Spin spin);

/// R(n) = exp(-i (n_perp . J) theta) with n_perp = (-sin phi, cos phi, 0),
/// evaluated through the eigendecomposition of the Hermitian generator.
///
/// At theta = 0 the result is the identity. At theta = pi every phi gives a
/// rotation sending +z to -z, and the phase pattern of R depends on phi.
UnitaryOp rotation(Spin spin, const Direction& n);

/// The unitary a frame acts through: R(n) for a direction, the matrix itself
/// for a unitary (checked against the spin dimension).
UnitaryOp frame_unitary(Spin spin, const Frame& frame);

}  // namespace spinportrait
