#pragma once

#include "spinportrait/linalg.hpp"
#include "spinportrait/spin.hpp"

namespace spinportrait {

/// Orthonormal discrete polynomials f_L(m) on the projections m = j..-j,
/// L = 0..2j. Row L holds f_L evaluated at every projection in descending
/// order; rows are orthonormal under the unit-weight inner product
/// sum_m f_L(m) f_L'(m) and each row is signed so that f_L(j) > 0.
///
/// f_L is the discrete Chebyshev (Hahn (0,0)) polynomial t_L(j + m, 2j + 1)
/// divided by its norm. The rows come from the monic three-term recurrence
///   p_{L+1}(x) = (x - (N-1)/2) p_L(x) - b_L p_{L-1}(x),
///   b_L = L^2 (N^2 - L^2) / (4 (4 L^2 - 1)),
/// run in its normalized form and then renormalized row by row, so no
/// factorial ever appears.
class CoeffTable {
 public:
  explicit CoeffTable(Spin spin);

  const Spin& spin() const noexcept { return spin_; }
  int max_degree() const noexcept { return spin_.two_j(); }

  /// f_L at basis index `m_index` (0 is m = j).
  double operator()(int L, int m_index) const { return values_(L, m_index); }
  /// f_L at the doubled projection `two_m`.
  double at(int L, int two_m) const;
  /// f_L over all projections, descending m.
  RealVector row(int L) const { return values_.row(L).transpose(); }
  const RealMatrix& values() const noexcept { return values_; }

 private:
  Spin spin_;
  RealMatrix values_;
};

CoeffTable coeff_table(Spin spin);

/// Legendre polynomial P_L(x) by the Bonnet recurrence.
double legendre(int L, double x);

/// Associated Legendre function P_l^m(x), 0 <= m <= l, without the
/// Condon-Shortley phase.
double assoc_legendre(int l, int m, double x);

/// S_L(frame) = V f_L(Jz) V^dagger, with V = R(n) for a direction frame and
/// V = u for a unitary frame. Throws DomainError unless 0 <= L <= 2j.
HermitianOp s_operator(Spin spin, int L, const Frame& frame);

/// Same as above with a precomputed table and frame unitary.
HermitianOp s_operator(const CoeffTable& table, int L, const UnitaryOp& v);

}  // namespace spinportrait
