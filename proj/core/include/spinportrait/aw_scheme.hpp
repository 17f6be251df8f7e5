#pragma once

#include <span>
#include <vector>

#include "spinportrait/linalg.hpp"
#include "spinportrait/spin.hpp"
#include "spinportrait/su2_scheme.hpp"

namespace spinportrait {

/// 2j + 1 cones with polar angles theta_q and azimuthal offset delta.
class AWGrid {
 public:
  /// Throws DomainError unless there are 2j + 1 pairwise distinct angles in
  /// (0, pi) and 0 < delta <= 1 / (2j + 1).
  AWGrid(Spin spin, std::vector<double> thetas, double delta);

  /// theta_q = pi (q + 1) / (2j + 2), delta = 1 / (2j + 1).
  static AWGrid standard(Spin spin);

  const Spin& spin() const noexcept { return spin_; }
  const std::vector<double>& thetas() const noexcept { return thetas_; }
  double delta() const noexcept { return delta_; }

 private:
  Spin spin_;
  std::vector<double> thetas_;
  double delta_;
};

/// n_{qr} = n(theta_q, 2 pi (r + q delta) / (2j + 1)) at index
/// k = q (2j + 1) + r.
std::vector<Direction> aw_directions(const AWGrid& grid);

/// Row k = conj(vec(U(j, n_k)))^T: only the top projection is measured.
ComplexMatrix aw_matrix(Spin spin, std::span<const Direction> dirs);

/// W_k = w(j, n_k).
std::vector<double> aw_forward(const DensityMatrix& rho,
                               std::span<const Direction> dirs);

/// vec(rho) = M^-1 W without validation. Throws DomainError unless there
/// are (2j + 1)^2 directions and values, FeasibilityError when M is
/// numerically singular (sigma_min / sigma_max < 1e-12).
ComplexMatrix aw_reconstruct_operator(Spin spin, std::span<const double> w,
                                      std::span<const Direction> dirs);
DensityMatrix aw_reconstruct(Spin spin, std::span<const double> w,
                             std::span<const Direction> dirs);

/// W' = W / sum W. Throws DegeneratePriorError for a zero sum.
std::vector<double> aw_normalize(std::span<const double> w);

/// rho = X / Tr X with X = M^-1 W'.
DensityMatrix aw_reconstruct_normalized(Spin spin,
                                        std::span<const double> w_normalized,
                                        std::span<const Direction> dirs);

/// 4j + 1 directions on the cone at polar angle theta with
/// phi_k = 2 pi k / (4j + 1). Throws FeasibilityError when a normalized
/// P_L^m(cos theta), 0 <= m <= L <= 2j, is below 1e-10 in magnitude or the
/// resulting set fails the Gram test.
DirectionSet newton_young_directions(Spin spin, double theta);

}  // namespace spinportrait
