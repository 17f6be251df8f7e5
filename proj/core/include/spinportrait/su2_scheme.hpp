#pragma once

#include <span>
#include <vector>

#include "spinportrait/linalg.hpp"
#include "spinportrait/orthopoly.hpp"
#include "spinportrait/portrait.hpp"
#include "spinportrait/spin.hpp"

namespace spinportrait {

/// 4j + 1 ordered directions. Shell L is the first 2L + 1 of them, so with
/// 0-based k, direction k serves every shell with 2L + 1 > k.
class DirectionSet {
 public:
  /// Throws DomainError unless there are exactly 4j + 1 directions.
  DirectionSet(Spin spin, std::vector<Direction> dirs);

  const Spin& spin() const noexcept { return spin_; }
  const std::vector<Direction>& dirs() const noexcept { return dirs_; }
  int size() const noexcept { return static_cast<int>(dirs_.size()); }
  const Direction& operator[](int k) const { return dirs_[size_t(k)]; }

  /// Directions of shell L.
  std::span<const Direction> shell(int L) const;
  /// Smallest shell containing direction k: ceil(k / 2) for 0-based k.
  static int first_shell(int k) { return (k + 1) / 2; }

 private:
  Spin spin_;
  std::vector<Direction> dirs_;
};

/// M(L)_{ik} = P_L(n_i . n_k) over the first 2L + 1 directions. L = 0 gives
/// the 1x1 matrix [1]. Throws DomainError unless 0 <= L <= 2j.
RealMatrix gram(int L, const DirectionSet& ds);

/// Gram matrix of an arbitrary direction list at degree L.
RealMatrix gram(int L, std::span<const Direction> dirs);

/// prod_{L=1}^{2j} det M(L). Nonzero iff the inverse map exists.
double feasibility(const DirectionSet& ds);

/// det M(L) for L = 1..2j (index 0 holds L = 1).
std::vector<double> gram_determinants(const DirectionSet& ds);

/// Real spherical-harmonic matrix of degree q over the first 2q + 1
/// directions: columns P_q^0, P_q^1 cos(phi), P_q^1 sin(phi), ...,
/// P_q^q cos(q phi), P_q^q sin(q phi).
RealMatrix legendre_matrix(int q, const DirectionSet& ds);

/// prod_{q=1}^{2j} det of `legendre_matrix(q)`. Vanishes exactly when
/// `feasibility` does; kept as an independent cross-check.
double legendre_determinant_product(const DirectionSet& ds);

/// Forward map as a matrix: row (k, m) = p_k conj(vec(U(m, n_k)))^T, so
/// Q vec(rho) reproduces `prob_vector`. Accepts any number of directions.
ComplexMatrix q_matrix(Spin spin, std::span<const Direction> dirs,
                       const PriorWeights& weights);
ComplexMatrix q_matrix(const DirectionSet& ds, const PriorWeights& weights);

/// Condition number of the equal-weight Q matrix.
double q_condition(const DirectionSet& ds);

/// The inverse map for one direction set. Construction inverts every shell
/// Gram matrix once and caches the dual operators
///   E_L(k) = sum_{k'} [M(L)^-1]_{k k'} S_L(n_{k'}).
class Su2Scheme {
 public:
  /// A Gram determinant below `det_tol` throws FeasibilityError naming the
  /// shell. Gram matrices have unit diagonal, so det <= 1 and the threshold
  /// is already relative.
  static constexpr double kDetTol = 1e-12;

  explicit Su2Scheme(DirectionSet ds, double det_tol = kDetTol);

  const DirectionSet& directions() const noexcept { return ds_; }
  const Spin& spin() const noexcept { return ds_.spin(); }
  const CoeffTable& coefficients() const noexcept { return f_; }
  int n_rotations() const noexcept { return ds_.size(); }

  /// L-dequantizer (4j + 1)^-1 f_L(m) S_L(n_k).
  HermitianOp l_dequantizer(int L, int k, int two_m) const;
  /// L-quantizer (4j + 1) f_L(m) E_L(k). Throws DomainError if direction k
  /// is not in shell L.
  HermitianOp l_quantizer(int L, int k, int two_m) const;
  /// Sum of the L-quantizers over every shell containing direction k.
  HermitianOp quantizer(int k, int two_m) const;
  /// Scaled dequantizer U(m, n_k) / (4j + 1).
  HermitianOp dequantizer(int k, int two_m) const;
  /// Cached dual operator E_L(k).
  const ComplexMatrix& dual(int L, int k) const;
  const ComplexMatrix& s_op(int L, int k) const;

  /// sum_{m,k} P(m, k) D(m, k) without any checks on P.
  ComplexMatrix reconstruct_operator(const ProbVector& p_eq) const;

  /// Validated inversion. Throws DomainError if P is not over this set or
  /// its blocks are not equal-weight, InvariantError if the result is not a
  /// state within 1e-10.
  DensityMatrix reconstruct(const ProbVector& p_eq) const;

 private:
  void check_direction(int k) const;

  DirectionSet ds_;
  CoeffTable f_;
  // s_[L][k] and dual_[L][k] for k < 2L + 1.
  std::vector<std::vector<ComplexMatrix>> s_;
  std::vector<std::vector<ComplexMatrix>> dual_;
};

HermitianOp l_quantizer(int L, int k, int two_m, const DirectionSet& ds);
HermitianOp quantizer(int k, int two_m, const DirectionSet& ds);
DensityMatrix reconstruct(const ProbVector& p_eq, const DirectionSet& ds);

/// Dual vectors of a triad: l_1 = n_2 x n_3 / (n_1 . (n_2 x n_3)) and
/// cyclic, so l_k . n_k' = delta_kk'. Throws FeasibilityError for a
/// coplanar triad.
std::vector<Vec3> dual_vectors(std::span<const Direction> triad);

/// Spin-1/2 closed form rho = (1/2) sum_m w(m, n_1) I + sum_k
/// [w(+1/2, n_k) - w(-1/2, n_k)] (J . l_k), with tomogram values
/// w = 3 P_eq. Throws DomainError unless j = 1/2.
ComplexMatrix qubit_closed_form(const ProbVector& p_eq,
                                const DirectionSet& ds);

}  // namespace spinportrait
