#pragma once

#include <span>
#include <vector>

#include "spinportrait/spin.hpp"

namespace spinportrait {

/// Disjoint blocks of doubled projections covering every projection of a
/// spin. Block order is the order of the portrait components.
class Partition {
 public:
  /// Throws DomainError for empty blocks, overlaps, foreign projections or
  /// incomplete coverage.
  Partition(Spin spin, std::vector<std::vector<int>> blocks);

  /// One block per projection: the spin-j portrait.
  static Partition singletons(Spin spin);
  /// {{j}, {j-1, ..., -j}}: the qubit portrait built on the top projection.
  static Partition top_vs_rest(Spin spin);

  const Spin& spin() const noexcept { return spin_; }
  const std::vector<std::vector<int>>& blocks() const noexcept {
    return blocks_;
  }
  int size() const noexcept { return static_cast<int>(blocks_.size()); }

 private:
  Spin spin_;
  std::vector<std::vector<int>> blocks_;
};

/// Prior probabilities p_k of choosing rotation k.
class PriorWeights {
 public:
  /// Throws DomainError for negative entries or a sum off 1 by more than
  /// 1e-12.
  explicit PriorWeights(std::vector<double> p);
  static PriorWeights uniform(int n);

  int size() const noexcept { return static_cast<int>(p_.size()); }
  double operator[](int k) const { return p_[static_cast<size_t>(k)]; }
  const std::vector<double>& values() const noexcept { return p_; }
  bool is_uniform(double tol = 1e-12) const;

 private:
  std::vector<double> p_;
};

/// Joint distribution P(m, k) over projections and rotations, stored k-major
/// with descending m: index(k, m) = k (2j + 1) + (j - m), k counted from 0.
class ProbVector {
 public:
  static constexpr double kNegativeTol = 1e-12;
  static constexpr double kSumTol = 1e-11;

  /// Throws InvariantError for wrong length, entries below -1e-12, or a sum
  /// off 1 by more than 1e-11.
  ProbVector(Spin spin, int n_rotations, std::vector<double> values);

  /// No invariant checks beyond the length (noisy or off-simplex inputs).
  static ProbVector unchecked(Spin spin, int n_rotations,
                              std::vector<double> values);

  const Spin& spin() const noexcept { return spin_; }
  int n_rotations() const noexcept { return n_rotations_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }

  static int index(Spin spin, int k, int two_m) {
    return k * spin.dim() + spin.index_of(two_m);
  }
  double at(int k, int two_m) const {
    return values_[static_cast<size_t>(index(spin_, k, two_m))];
  }
  /// Entry by rotation and basis index (0 is m = j).
  double operator()(int k, int m_index) const {
    return values_[static_cast<size_t>(k * spin_.dim() + m_index)];
  }
  std::span<const double> block(int k) const;
  const std::vector<double>& values() const noexcept { return values_; }

  /// sum_m P(m, k) for every k.
  std::vector<double> block_sums() const;
  /// True when every block sums to 1 / n_rotations within `tol`.
  bool has_equal_weights(double tol = 1e-9) const;

 private:
  struct NoCheck {};
  ProbVector(Spin spin, int n_rotations, std::vector<double> values, NoCheck);

  Spin spin_;
  int n_rotations_;
  std::vector<double> values_;
};

/// Block sums of a tomogram column over a partition (the spin-s portrait).
/// Throws DomainError if the column length or sum (within 1e-9) is wrong.
std::vector<double> portrait(std::span<const double> w_column,
                             const Partition& partition);

/// Stacks equal-length portraits scaled by their prior weights. The spin of
/// the result is the pseudospin of one portrait (length 2s + 1).
ProbVector stack(const std::vector<std::vector<double>>& portraits,
                 const PriorWeights& weights);

/// P(m, k) = p_k w(m, frame_k).
ProbVector prob_vector(const DensityMatrix& rho, std::span<const Frame> frames,
                       const PriorWeights& weights);
ProbVector prob_vector(const DensityMatrix& rho,
                       std::span<const Direction> directions,
                       const PriorWeights& weights);

/// Recovers every tomogram column w(m, k) = P(m, k) / sum_m P(m, k) and
/// restacks them with weights 1 / N_u. Throws DegeneratePriorError when a
/// block sums to zero.
ProbVector normalize_to_eq(const ProbVector& p);

}  // namespace spinportrait
