#pragma once

#include <functional>
#include <vector>

#include "spinportrait/linalg.hpp"
#include "spinportrait/orthopoly.hpp"
#include "spinportrait/spin.hpp"

namespace spinportrait {

/// One tomogram value w(m, frame).
struct TomogramSample {
  int two_m;
  Frame frame;
  double value;
};

/// U(m, frame) = V |j m><j m| V^dagger. Throws DomainError for an invalid m.
HermitianOp dequantizer(Spin spin, int two_m, const Frame& frame);

/// w(m, frame) = Tr(rho U(m, frame)).
double tomogram(const DensityMatrix& rho, int two_m, const Frame& frame);

/// The whole column w(., frame), descending m. Sums to Tr(rho).
RealVector tomogram_column(const DensityMatrix& rho, const Frame& frame);

/// Same for an arbitrary operator: Re <j m| V^dagger A V |j m>.
RealVector tomogram_column(const ComplexMatrix& a, const UnitaryOp& v);

/// D(m, n) = sum_L (2L + 1) f_L(m) S_L(n).
HermitianOp quantizer_continuous(Spin spin, int two_m, const Direction& n);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Product rule on the unit sphere: Gauss-Legendre in cos(theta) times the
/// uniform trapezoid rule in phi. Integrates spherical polynomials of degree
/// up to min(2 n_theta - 1, n_phi - 1) exactly.
struct SphereQuadrature {
  int n_theta;
  int n_phi;

  /// Smallest rule exact for a spin-j reconstruction integrand (degree 4j):
  /// n_theta = 2j + 1, n_phi = 4j + 2.
  static SphereQuadrature minimal(Spin spin);
  /// Twice the minimal node counts.
  static SphereQuadrature standard(Spin spin);
};

struct SphereNode {
  Direction direction;
  /// Weight normalized so the weights sum to 1, i.e. dOmega / (4 pi).
  double weight;
};

/// Nodes in a fixed order (theta outer, phi inner).
std::vector<SphereNode> sphere_nodes(const SphereQuadrature& q);

/// Callback yielding w(m, n) for a doubled projection and a direction.
using TomogramFn = std::function<double(int two_m, const Direction& n)>;

/// rho = sum_m (4 pi)^-1 \int w(m, n) D(m, n) dOmega, evaluated by product
/// quadrature. Throws ConfigError when the rule is below the exactness
/// threshold of `SphereQuadrature::minimal`.
HermitianOp reconstruct_operator_from_sphere(Spin spin, const TomogramFn& w,
                                             const SphereQuadrature& q);

/// Validating wrapper; throws InvariantError if the result is not a state.
DensityMatrix reconstruct_from_sphere(Spin spin, const TomogramFn& w,
                                      const SphereQuadrature& q);
DensityMatrix reconstruct_from_sphere(Spin spin, const TomogramFn& w);

/// Tomogram callback of a fixed operator (used for synthetic data).
TomogramFn tomogram_fn(const ComplexMatrix& a);

}  // namespace spinportrait
