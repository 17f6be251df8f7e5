#pragma once

// Independent oracles and fixtures shared by the unit tests.

#include <cmath>
#include <numbers>
#include <vector>

#include "spinportrait/linalg.hpp"
#include "spinportrait/optimizer.hpp"
#include "spinportrait/random.hpp"
#include "spinportrait/spin.hpp"
#include "spinportrait/su2_scheme.hpp"

namespace sp_test {

using namespace spinportrait;

inline const double kPi = std::numbers::pi;

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// (I + r . sigma) / 2.
inline ComplexMatrix bloch_state(const Vec3& r) {
  return 0.5 * (ComplexMatrix::Identity(2, 2) + r.x() * pauli_x() +
                r.y() * pauli_y() + r.z() * pauli_z());
}

/// exp(A) by its Taylor series; fine for the small norms used in tests.
inline ComplexMatrix expm_series(const ComplexMatrix& a, int terms = 80) {
  ComplexMatrix term = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix acc = term;
  for (int n = 1; n < terms; ++n) {
    term = (term * a / double(n)).eval();
    acc += term;
  }
  return acc;
}

/// Legendre polynomial from the explicit sum
/// 2^-L sum_k (-1)^k C(L, k) C(2L - 2k, L) x^(L - 2k).
inline double legendre_explicit(int L, double x) {
  auto binom = [](int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  double acc = 0.0;
  for (int k = 0; 2 * k <= L; ++k) {
    acc += (k % 2 ? -1.0 : 1.0) * binom(L, k) * binom(2 * L - 2 * k, L) *
           std::pow(x, L - 2 * k);
  }
  return acc / std::pow(2.0, L);
}

/// Discrete Chebyshev polynomial t_n(x, N) = n! Delta^n [C(x, n) C(x - N, n)]
/// with generalized binomials, evaluated by the forward-difference sum.
inline long double chebyshev_t(int n, int x, int N) {
  auto gbinom = [](long double y, int k) {
    long double r = 1.0L;
    for (int i = 0; i < k; ++i) r *= (y - i) / (i + 1);
    return r;
  };
  auto g = [&](long double y) { return gbinom(y, n) * gbinom(y - N, n); };
  long double acc = 0.0L;
  long double c = 1.0L;  // C(n, i)
  for (int i = 0; i <= n; ++i) {
    acc += ((n - i) % 2 ? -1.0L : 1.0L) * c * g(x + i);
    c = c * (n - i) / (i + 1);
  }
  long double fact = 1.0L;
  for (int i = 2; i <= n; ++i) fact *= i;
  return fact * acc;
}

/// d_L = sqrt((2j + L + 1)! / ((2L + 1) (2j - L)!)).
inline long double chebyshev_norm(int L, int two_j) {
  long double ratio = 1.0L;
  for (int i = two_j - L + 1; i <= two_j + L + 1; ++i) ratio *= i;
  return std::sqrt(ratio / (2 * L + 1));
}

inline DirectionSet orthogonal_triad() {
  return DirectionSet(Spin(1), {Direction::plus_z(), Direction::plus_x(),
                                Direction::plus_y()});
}

/// Random set whose Gram determinant product exceeds a bound. Above 2j = 3
/// uniform sets almost never qualify and even optimized sets fall below
/// 1e-6 at 2j = 6, so a short seeded optimizer run supplies the set and the
/// bound is not enforced.
inline DirectionSet random_feasible_set(Spin spin, Rng& rng,
                                        double min_feasibility = 1e-6) {
  if (spin.two_j() > 3) {
    OptimizerConfig cfg;
    cfg.restarts = 1;
    cfg.max_iters = 1500;
    cfg.seed = rng();
    return optimize(spin, cfg).directions;
  }
  for (;;) {
    std::vector<Direction> dirs;
    for (int k = 0; k < spin.direction_count(); ++k) {
      dirs.push_back(random_direction(rng));
    }
    DirectionSet ds(spin, std::move(dirs));
    if (feasibility(ds) > min_feasibility) return ds;
  }
}

inline ComplexMatrix random_hermitian(int d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const double re = n(rng);
      const double im = n(rng);
      a(i, k) = Complex(re, im);
    }
  }
  return 0.5 * (a + a.adjoint());
}

}  // namespace sp_test
