#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinportrait/portrait.hpp"
#include "spinportrait/su2_scheme.hpp"

namespace spinportrait {

enum class PsdMethod { Eigenvalue, Sylvester };

struct RegionVerdict {
  bool is_quantum;
  /// Smallest eigenvalue of the reconstructed operator.
  double min_eigenvalue;
  /// min_eigenvalue + tol; nonnegative exactly when the PSD test passes.
  double margin;
  /// False when the blocks do not all sum to 1 / N_u (within 1e-9), in which
  /// case the point is not the symbol of any unit-trace operator.
  bool consistent;
};

/// Reconstructs sum P(m, k) D(m, k) and tests it. With the eigenvalue
/// method the point is quantum iff it is consistent and
/// min_eigenvalue >= -tol; with Sylvester iff it is consistent and every
/// principal minor is >= -tol.
RegionVerdict is_quantum(const ProbVector& p_eq, const Su2Scheme& scheme,
                         double tol = 1e-10,
                         PsdMethod method = PsdMethod::Eigenvalue);
RegionVerdict is_quantum(const ProbVector& p_eq, const DirectionSet& ds,
                         double tol = 1e-10,
                         PsdMethod method = PsdMethod::Eigenvalue);

/// All 2^d - 1 principal minors >= -tol.
bool psd_sylvester(const ComplexMatrix& m, double tol);
/// Smallest principal minor.
double min_principal_minor(const ComplexMatrix& m);

/// Squared radius of the qubit ball for an orthonormal triad: a pure state
/// has |r| = 1 and P(+1/2, n_k) = 1/6 + r_k / 6, so the bound is 1/36.
inline constexpr double kQubitBallRadius2 = 1.0 / 36.0;

/// sum_k (P(+1/2, n_k) - 1/6)^2. Throws DomainError unless j = 1/2 and the
/// triad is orthonormal to 1e-10.
double qubit_ball_radius2(const ProbVector& p_eq, const DirectionSet& ds);
bool qubit_ball_test(const ProbVector& p_eq, const DirectionSet& ds,
                     double tol = 1e-10);

/// With a = 3 sum_m P(m, n_1) and v = sum_k 3 (P(+1/2, n_k) - P(-1/2, n_k))
/// l_k, the state is rho = (a I + sigma . v) / 2 and the residuals are
/// {rho_11, det rho, rho_22} = {(a + v_z)/2, (a^2 - |v|^2)/4, (a - v_z)/2}.
std::array<double, 3> qubit_region_inequalities(const ProbVector& p_eq,
                                                const DirectionSet& ds);

/// A cut through the simplex. Every (k, m) entry is fixed, a free axis, or
/// the complement of its block (1 / N_u minus the rest of the block). An
/// entry not listed anywhere is a complement; each block needs exactly one.
struct SliceSpec {
  struct Fixed {
    int k;
    int two_m;
    double value;
  };
  struct Axis {
    int k;
    int two_m;
    double lo;
    double hi;
  };

  std::vector<Fixed> fixed;
  std::vector<Axis> axes;

  /// Throws ConfigError for 0 or more than 3 axes, duplicated or unknown
  /// entries, empty ranges, or a block without exactly one complement.
  void validate(Spin spin, int n_rotations) const;

  /// P(+1/2, n_k) for k = 0, 1, 2 over [0, 1/3]; P(-1/2, n_k) complements.
  static SliceSpec qubit_cube();
  /// Spin 1: P(+1, n_k) free on [0, 1/5 - c] for k = 0, 1, 2; P(+1, n_3) =
  /// P(+1, n_4) = c and P(-1, n_k) = c for every k; P(0, n_k) complements.
  static SliceSpec qutrit_cut(double c);
};

/// Five spin-1 directions with n1.n2 = n2.n3 = n3.n1 = n1.n4 = n2.n4 =
/// n1.n5 = n3.n5 = 1/sqrt(3).
DirectionSet qutrit_cut_directions();

/// Triad with n1 = +z, n2 in the xz-plane and a chosen triple product
/// n1 . (n2 x n3) in (0, 1]. A value of 1 gives the orthonormal triad.
DirectionSet qubit_triad_with_triple(double triple);

struct RegionPoint {
  std::vector<double> coords;
  bool is_quantum;
  double min_eigenvalue;
};

/// Scans `resolution` points per axis (endpoints included), row-major with
/// the last axis fastest. Throws ConfigError for resolution < 2.
std::vector<RegionPoint> sample_region(const Su2Scheme& scheme,
                                       const SliceSpec& slice, int resolution,
                                       double tol = 1e-10);

/// The P_eq vector at one point of a slice.
ProbVector slice_point(Spin spin, int n_rotations, const SliceSpec& slice,
                       const std::vector<double>& coords);

/// `coord1,coord2[,coord3],is_quantum,min_eig` header, then one row each.
void write_region_csv(std::ostream& out, const std::vector<RegionPoint>& pts);

}  // namespace spinportrait
