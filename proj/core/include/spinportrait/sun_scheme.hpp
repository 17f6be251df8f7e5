#pragma once

#include <span>
#include <vector>

#include "spinportrait/linalg.hpp"
#include "spinportrait/portrait.hpp"
#include "spinportrait/random.hpp"
#include "spinportrait/spin.hpp"

namespace spinportrait {

/// 2j + 2 unitary frames of dimension 2j + 1.
class UnitaryFrameSet {
 public:
  /// Throws DomainError for a wrong count, wrong dimension, or a frame that
  /// is not unitary to 1e-10.
  UnitaryFrameSet(Spin spin, std::vector<UnitaryOp> frames);

  /// 2j + 2 Haar-random frames drawn from `rng`.
  static UnitaryFrameSet haar(Spin spin, Rng& rng);

  static int required_count(Spin spin) { return spin.two_j() + 2; }

  const Spin& spin() const noexcept { return spin_; }
  const std::vector<UnitaryOp>& frames() const noexcept { return frames_; }
  int size() const noexcept { return static_cast<int>(frames_.size()); }
  const UnitaryOp& operator[](int k) const { return frames_[size_t(k)]; }

 private:
  Spin spin_;
  std::vector<UnitaryOp> frames_;
};

/// Haar frames in a list of any length (rank experiments).
std::vector<UnitaryOp> haar_frames(Spin spin, int count, Rng& rng);

/// Row (k, m) = p_k conj(vec(U(m, u_k)))^T; any number of frames.
ComplexMatrix r_matrix(Spin spin, std::span<const UnitaryOp> frames,
                       const PriorWeights& weights);
ComplexMatrix r_matrix(const UnitaryFrameSet& ufs, const PriorWeights& weights);

/// Gram matrix of the traceless operators S_L(u_k), L = 1..2j, in the order
/// (k outer, L inner): entry Tr(S_L(u_k) S_L'(u_k')).
RealMatrix gamma_prime_gram(const UnitaryFrameSet& ufs);

/// det of `gamma_prime_gram`, in [0, 1]; zero iff the frames cannot
/// determine the state.
double gamma_prime(const UnitaryFrameSet& ufs);

/// Upper bound (1 + sqrt(1 - g)) / (1 - sqrt(1 - g)) on the condition number
/// of a unit-diagonal Gram matrix with determinant g. +inf at g = 0.
double mu_bound(double gamma);

/// P = p_k w(m, u_k).
ProbVector sun_forward(const DensityMatrix& rho, const UnitaryFrameSet& ufs,
                       const PriorWeights& weights);

/// Least-squares inverse of the R matrix through a rank-revealing
/// (complete orthogonal) factorization, Hermitian part returned. Throws
/// FeasibilityError if rank(R) < (2j + 1)^2.
ComplexMatrix reconstruct_pinv_operator(const ProbVector& p,
                                        const UnitaryFrameSet& ufs,
                                        const PriorWeights& weights);

/// Validated inverse (trace and positivity to 1e-9).
DensityMatrix reconstruct_pinv(const ProbVector& p, const UnitaryFrameSet& ufs,
                               const PriorWeights& weights);

}  // namespace spinportrait
