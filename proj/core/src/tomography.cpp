#include "spinportrait/tomography.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "spinportrait/errors.hpp"

namespace spinportrait {

HermitianOp dequantizer(Spin spin, int two_m, const Frame& frame) {
  const int idx = spin.index_of(two_m);
  const UnitaryOp v = frame_unitary(spin, frame);
  const ComplexVector col = v.mat.col(idx);
  return HermitianOp(col * col.adjoint());
}

RealVector tomogram_column(const ComplexMatrix& a, const UnitaryOp& v) {
  const ComplexMatrix rotated = v.mat.adjoint() * a * v.mat;
  return rotated.diagonal().real();
}

RealVector tomogram_column(const DensityMatrix& rho, const Frame& frame) {
  return tomogram_column(rho.matrix(), frame_unitary(rho.spin(), frame));
}

double tomogram(const DensityMatrix& rho, int two_m, const Frame& frame) {
  const int idx = rho.spin().index_of(two_m);
  const UnitaryOp v = frame_unitary(rho.spin(), frame);
  const ComplexVector col = v.mat.col(idx);
  return (col.adjoint() * rho.matrix() * col)(0, 0).real();
}

namespace {

// c(m') = sum_L (2L+1) f_L(m) f_L(m') for fixed m: the eigenvalues of D(m, n)
// in the rotated basis.
RealVector quantizer_spectrum(const CoeffTable& f, int m_index) {
  const int n = f.spin().dim();
  RealVector out = RealVector::Zero(n);
  for (int L = 0; L < n; ++L) {
    out += (2.0 * L + 1.0) * f(L, m_index) * f.row(L);
  }
  return out;
}

}  // namespace

HermitianOp quantizer_continuous(Spin spin, int two_m, const Direction& n) {
  const int idx = spin.index_of(two_m);
  const CoeffTable f(spin);
  return HermitianOp(
      conjugate_diagonal(rotation(spin, n).mat, quantizer_spectrum(f, idx)));
}

namespace {

// (P_n(x), P_n'(x)) by the Bonnet recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int l = 1; l < n; ++l) {
    const double p2 = ((2.0 * l + 1.0) * x * p1 - l * p0) / (l + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw ConfigError("gauss_legendre: need at least one node");
  GaussLegendre out;
  out.nodes.assign(n, 0.0);
  out.weights.assign(n, 0.0);
  // Roots are symmetric about 0; Newton from the usual cosine guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.nodes[i] = x;
    out.nodes[n - 1 - i] = -x;
    out.weights[i] = w;
    out.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) out.nodes[n / 2] = 0.0;
  return out;
}

SphereQuadrature SphereQuadrature::minimal(Spin spin) {
  return {spin.two_j() + 1, 2 * spin.two_j() + 2};
}

SphereQuadrature SphereQuadrature::standard(Spin spin) {
  const SphereQuadrature m = minimal(spin);
  return {2 * m.n_theta, 2 * m.n_phi};
}

std::vector<SphereNode> sphere_nodes(const SphereQuadrature& q) {
  if (q.n_theta < 1 || q.n_phi < 1) {
    throw ConfigError("sphere quadrature: node counts must be positive");
  }
  const GaussLegendre gl = gauss_legendre(q.n_theta);
  std::vector<SphereNode> nodes;
  nodes.reserve(static_cast<size_t>(q.n_theta) * q.n_phi);
  for (int a = 0; a < q.n_theta; ++a) {
    const double theta = std::acos(gl.nodes[a]);
    // GL weights sum to 2 and the phi rule to 2 pi; normalize by 4 pi.
    const double w = gl.weights[a] / (2.0 * q.n_phi);
    for (int b = 0; b < q.n_phi; ++b) {
      const double phi = 2.0 * std::numbers::pi * b / q.n_phi;
      nodes.push_back({Direction(theta, phi), w});
    }
  }
  return nodes;
}

HermitianOp reconstruct_operator_from_sphere(Spin spin, const TomogramFn& w,
                                             const SphereQuadrature& q) {
  const SphereQuadrature need = SphereQuadrature::minimal(spin);
  if (q.n_theta < need.n_theta || q.n_phi < need.n_phi) {
    throw ConfigError(
        "sphere quadrature: " + std::to_string(q.n_theta) + "x" +
        std::to_string(q.n_phi) + " nodes is below the exact minimum " +
        std::to_string(need.n_theta) + "x" + std::to_string(need.n_phi) +
        " for 2j = " + std::to_string(spin.two_j()));
  }
  const int d = spin.dim();
  const CoeffTable f(spin);
  std::vector<RealVector> spectra;
  spectra.reserve(d);
  for (int i = 0; i < d; ++i) spectra.push_back(quantizer_spectrum(f, i));

  // Sequential accumulation in node order keeps the result reproducible.
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (const SphereNode& node : sphere_nodes(q)) {
    RealVector combined = RealVector::Zero(d);
    for (int i = 0; i < d; ++i) {
      combined += w(spin.two_m_at(i), node.direction) * spectra[i];
    }
    acc += node.weight *
           conjugate_diagonal(rotation(spin, node.direction).mat, combined);
  }
  return HermitianOp(acc);
}

DensityMatrix reconstruct_from_sphere(Spin spin, const TomogramFn& w,
                                      const SphereQuadrature& q) {
  const HermitianOp op = reconstruct_operator_from_sphere(spin, w, q);
  return DensityMatrix::from_matrix(spin, op.mat, 1e-10, 1e-10);
}

DensityMatrix reconstruct_from_sphere(Spin spin, const TomogramFn& w) {
  return reconstruct_from_sphere(spin, w, SphereQuadrature::standard(spin));
}

TomogramFn tomogram_fn(const ComplexMatrix& a) {
  const Spin spin = Spin::from_dim(static_cast<int>(a.rows()));
  return [a, spin](int two_m, const Direction& n) {
    const UnitaryOp v = rotation(spin, n);
    const ComplexVector col = v.mat.col(spin.index_of(two_m));
    return (col.adjoint() * a * col)(0, 0).real();
  };
}

}  // namespace spinportrait
