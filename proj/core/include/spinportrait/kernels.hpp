#pragma once

#include <vector>

#include "spinportrait/linalg.hpp"
#include "spinportrait/portrait.hpp"
#include "spinportrait/su2_scheme.hpp"
#include "spinportrait/tomography.hpp"

namespace spinportrait {

/// A symbol over a direction set: one complex number per (k, m), same
/// layout as ProbVector. Symbols of non-Hermitian operators are complex.
using Symbol = ComplexVector;

/// Star-product and intertwining kernels of one feasible direction set.
/// Projections are doubled, directions 0-based. Quantizers D(m, k) and
/// dequantizers U(m, n_k) are cached at construction; kernel values are
/// computed on demand.
class Kernels {
 public:
  explicit Kernels(Su2Scheme scheme);
  explicit Kernels(DirectionSet ds) : Kernels(Su2Scheme(std::move(ds))) {}

  const Su2Scheme& scheme() const noexcept { return scheme_; }
  const Spin& spin() const noexcept { return scheme_.spin(); }
  int symbol_size() const noexcept { return n_ * d_; }

  /// Tr[D(m1, k1) D(m2, k2) U(m3, k3)] / (4j + 1).
  Complex star_kernel(int m3, int k3, int m2, int k2, int m1, int k1) const;
  /// The same kernel from the triple sum over S_L traces.
  Complex star_kernel_expanded(int m3, int k3, int m2, int k2, int m1,
                               int k1) const;

  /// P3(m3, k3) = sum K(m3, k3, m2, k2, m1, k1) P2(m2, k2) P1(m1, k1).
  Symbol star_apply(const Symbol& p1, const Symbol& p2) const;

  /// Tr(A U(m, n_k)) / (4j + 1); for a state this is P_eq.
  Symbol symbol_of(const ComplexMatrix& a) const;
  /// sum P(m, k) D(m, k).
  ComplexMatrix operator_of(const Symbol& p) const;
  /// 1 / (4j + 1) everywhere.
  Symbol identity_symbol() const;

  /// (4j + 1)^-1 Tr(D(m', n') U(m, n_k)) with the continuous quantizer.
  double kernel_w_to_p(int m, int k, int m_prime, const Direction& n_prime) const;
  /// (4j + 1)^-1 sum_L (2L + 1) f_L(m') f_L(m) P_L(n' . n_k).
  double kernel_w_to_p_expanded(int m, int k, int m_prime,
                                const Direction& n_prime) const;

  /// Tr(D(m', k') U(m, n)).
  double kernel_p_to_w(int m, const Direction& n, int m_prime,
                       int k_prime) const;
  /// (4j + 1) sum_{L >= ceil(k'/2)} f_L(m') f_L(m)
  ///   sum_k [M(L)^-1]_{k'k} P_L(n_k . n).
  double kernel_p_to_w_expanded(int m, const Direction& n, int m_prime,
                                int k_prime) const;

  /// P_eq from a continuous tomogram by contracting `kernel_w_to_p` against
  /// sphere quadrature (exact at or above `SphereQuadrature::minimal`).
  ProbVector w_to_p(const TomogramFn& w, const SphereQuadrature& q) const;
  /// Tomogram column w(., n) predicted from P_eq.
  RealVector p_to_w(const ProbVector& p_eq, const Direction& n) const;

 private:
  int flat(int k, int two_m) const;

  Su2Scheme scheme_;
  int n_;
  int d_;
  std::vector<ComplexMatrix> quant_;    // D(m, k) at flat(k, m)
  std::vector<ComplexMatrix> dequant_;  // U(m, n_k) at flat(k, m), unscaled
  std::vector<RealMatrix> gram_inv_;    // M(L)^-1
};

/// Closed forms for spin 1/2 over a triad, written with the dual vectors
/// l_k and 0-based k (the L = 0 shell sits on k = 0).
///
/// Star kernel: 3 { delta_{k3,0} delta_{k2,0} / 4
///   + delta_{k3,0} m2 m1 (l_k2 . n_k1) + delta_{k2,0} m3 m1 (l_k3 . n_k1)
///   + m3 m2 (l_k3 . l_k2) + 2i m3 m2 m1 ((l_k3 x l_k2) . n_k1) }.
/// It equals `Kernels::star_kernel` with (m1, k1) and (m3, k3) exchanged,
/// i.e. Tr[D(m3, k3) D(m2, k2) U(m1, k1)] / 3.
Complex qubit_star_kernel(const DirectionSet& ds, int m3, int k3, int m2,
                          int k2, int m1, int k1);
/// 1/6 + 2 m' m (n' . n_k).
double qubit_kernel_w_to_p(const DirectionSet& ds, int m, int k, int m_prime,
                           const Direction& n_prime);
/// 3 { delta_{k',0} / 2 + 2 m' m (l_k' . n) }.
double qubit_kernel_p_to_w(const DirectionSet& ds, int m, const Direction& n,
                           int m_prime, int k_prime);

}  // namespace spinportrait
