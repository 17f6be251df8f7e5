#include "spinportrait/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinportrait/errors.hpp"
#include "spinportrait/tomography.hpp"

namespace spinportrait {

Partition::Partition(Spin spin, std::vector<std::vector<int>> blocks)
    : spin_(spin), blocks_(std::move(blocks)) {
  std::vector<int> seen(spin.dim(), 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition: empty block");
    for (int two_m : b) {
      if (!spin.is_projection(two_m)) {
        throw DomainError("partition: 2m = " + std::to_string(two_m) +
                          " is not a projection");
      }
      if (seen[spin.index_of(two_m)]++ > 0) {
        throw DomainError("partition: projection 2m = " +
                          std::to_string(two_m) + " appears twice");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw DomainError("partition: blocks do not cover every projection");
  }
}

Partition Partition::singletons(Spin spin) {
  std::vector<std::vector<int>> blocks;
  for (int two_m : spin.projections()) blocks.push_back({two_m});
  return Partition(spin, std::move(blocks));
}

Partition Partition::top_vs_rest(Spin spin) {
  if (spin.two_j() == 0) throw DomainError("partition: spin 0 has one block");
  std::vector<int> rest = spin.projections();
  rest.erase(rest.begin());
  return Partition(spin, {{spin.two_j()}, rest});
}

PriorWeights::PriorWeights(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw DomainError("prior weights: empty");
  double sum = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0)) throw DomainError("prior weights: negative entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("prior weights: sum " + std::to_string(sum) +
                      " differs from 1");
  }
}

PriorWeights PriorWeights::uniform(int n) {
  if (n < 1) throw DomainError("prior weights: need at least one rotation");
  return PriorWeights(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

bool PriorWeights::is_uniform(double tol) const {
  const double u = 1.0 / size();
  return std::all_of(p_.begin(), p_.end(),
                     [&](double x) { return std::abs(x - u) <= tol; });
}

ProbVector::ProbVector(Spin spin, int n_rotations, std::vector<double> values,
                       NoCheck)
    : spin_(spin), n_rotations_(n_rotations), values_(std::move(values)) {
  if (n_rotations < 1) throw InvariantError("prob vector: no rotations");
  if (values_.size() != static_cast<size_t>(n_rotations) * spin.dim()) {
    throw InvariantError("prob vector: expected " +
                         std::to_string(n_rotations * spin.dim()) +
                         " entries, got " + std::to_string(values_.size()));
  }
}

ProbVector::ProbVector(Spin spin, int n_rotations, std::vector<double> values)
    : ProbVector(spin, n_rotations, std::move(values), NoCheck{}) {
  double sum = 0.0;
  for (double x : values_) {
    if (!(x >= -kNegativeTol)) {
      throw InvariantError("prob vector: negative entry " + std::to_string(x));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw InvariantError("prob vector: entries sum to " +
                         std::to_string(sum));
  }
}

ProbVector ProbVector::unchecked(Spin spin, int n_rotations,
                                 std::vector<double> values) {
  return ProbVector(spin, n_rotations, std::move(values), NoCheck{});
}

std::span<const double> ProbVector::block(int k) const {
  return std::span<const double>(values_).subspan(
      static_cast<size_t>(k) * spin_.dim(), static_cast<size_t>(spin_.dim()));
}

std::vector<double> ProbVector::block_sums() const {
  std::vector<double> out(static_cast<size_t>(n_rotations_));
  for (int k = 0; k < n_rotations_; ++k) {
    const auto b = block(k);
    out[k] = std::accumulate(b.begin(), b.end(), 0.0);
  }
  return out;
}

bool ProbVector::has_equal_weights(double tol) const {
  const double target = 1.0 / n_rotations_;
  const auto sums = block_sums();
  return std::all_of(sums.begin(), sums.end(), [&](double s) {
    return std::abs(s - target) <= tol;
  });
}

std::vector<double> portrait(std::span<const double> w_column,
                             const Partition& partition) {
  const Spin spin = partition.spin();
  if (w_column.size() != static_cast<size_t>(spin.dim())) {
    throw DomainError("portrait: column length does not match the partition");
  }
  const double sum = std::accumulate(w_column.begin(), w_column.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("portrait: column sums to " + std::to_string(sum));
  }
  std::vector<double> out;
  out.reserve(partition.blocks().size());
  for (const auto& b : partition.blocks()) {
    double acc = 0.0;
    for (int two_m : b) acc += w_column[spin.index_of(two_m)];
    out.push_back(acc);
  }
  return out;
}

ProbVector stack(const std::vector<std::vector<double>>& portraits,
                 const PriorWeights& weights) {
  if (portraits.empty()) throw DomainError("stack: no portraits");
  if (static_cast<int>(portraits.size()) != weights.size()) {
    throw DomainError("stack: " + std::to_string(portraits.size()) +
                      " portraits but " + std::to_string(weights.size()) +
                      " weights");
  }
  const size_t len = portraits.front().size();
  if (len == 0) throw DomainError("stack: empty portrait");
  std::vector<double> values;
  values.reserve(len * portraits.size());
  for (size_t k = 0; k < portraits.size(); ++k) {
    if (portraits[k].size() != len) {
      throw DomainError("stack: portraits differ in length");
    }
    for (double w : portraits[k]) values.push_back(weights[int(k)] * w);
  }
  return ProbVector(Spin::from_dim(static_cast<int>(len)),
                    static_cast<int>(portraits.size()), std::move(values));
}

ProbVector prob_vector(const DensityMatrix& rho, std::span<const Frame> frames,
                       const PriorWeights& weights) {
  if (static_cast<int>(frames.size()) != weights.size()) {
    throw DomainError("prob_vector: frame and weight counts differ");
  }
  const Spin spin = rho.spin();
  std::vector<double> values;
  values.reserve(frames.size() * spin.dim());
  for (size_t k = 0; k < frames.size(); ++k) {
    const RealVector w = tomogram_column(rho, frames[k]);
    for (int i = 0; i < spin.dim(); ++i) values.push_back(weights[int(k)] * w(i));
  }
  return ProbVector(spin, static_cast<int>(frames.size()), std::move(values));
}

ProbVector prob_vector(const DensityMatrix& rho,
                       std::span<const Direction> directions,
                       const PriorWeights& weights) {
  std::vector<Frame> frames(directions.begin(), directions.end());
  return prob_vector(rho, std::span<const Frame>(frames), weights);
}

ProbVector normalize_to_eq(const ProbVector& p) {
  const int nu = p.n_rotations();
  const auto sums = p.block_sums();
  std::vector<double> values(p.values().size());
  for (int k = 0; k < nu; ++k) {
    if (!(sums[k] > 0.0)) {
      throw DegeneratePriorError("normalize_to_eq: rotation " +
                                 std::to_string(k) +
                                 " has zero total probability");
    }
    const auto b = p.block(k);
    for (size_t i = 0; i < b.size(); ++i) {
      values[k * b.size() + i] = b[i] / sums[k] / nu;
    }
  }
  return ProbVector::unchecked(p.spin(), nu, std::move(values));
}

}  // namespace spinportrait
