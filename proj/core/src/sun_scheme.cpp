#include "spinportrait/sun_scheme.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spinportrait/errors.hpp"
#include "spinportrait/orthopoly.hpp"
#include "spinportrait/tomography.hpp"

namespace spinportrait {

UnitaryFrameSet::UnitaryFrameSet(Spin spin, std::vector<UnitaryOp> frames)
    : spin_(spin), frames_(std::move(frames)) {
  if (size() != required_count(spin)) {
    throw DomainError("unitary frame set: 2j = " + std::to_string(spin.two_j()) +
                      " needs " + std::to_string(required_count(spin)) +
                      " frames, got " + std::to_string(size()));
  }
  for (const auto& u : frames_) {
    if (u.dim() != spin.dim() || u.mat.cols() != spin.dim()) {
      throw DomainError("unitary frame set: frame has the wrong dimension");
    }
    if (!u.is_unitary(1e-10)) {
      throw DomainError("unitary frame set: frame is not unitary");
    }
  }
}

std::vector<UnitaryOp> haar_frames(Spin spin, int count, Rng& rng) {
  std::vector<UnitaryOp> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(haar_unitary(spin.dim(), rng));
  return out;
}

UnitaryFrameSet UnitaryFrameSet::haar(Spin spin, Rng& rng) {
  return UnitaryFrameSet(spin, haar_frames(spin, required_count(spin), rng));
}

ComplexMatrix r_matrix(Spin spin, std::span<const UnitaryOp> frames,
                       const PriorWeights& weights) {
  if (static_cast<int>(frames.size()) != weights.size()) {
    throw DomainError("r_matrix: frame and weight counts differ");
  }
  const int d = spin.dim();
  ComplexMatrix r(static_cast<int>(frames.size()) * d, d * d);
  for (size_t k = 0; k < frames.size(); ++k) {
    if (frames[k].dim() != d) throw DomainError("r_matrix: frame dimension");
    for (int i = 0; i < d; ++i) {
      const ComplexVector col = frames[k].mat.col(i);
      const ComplexMatrix u = col * col.adjoint();
      r.row(int(k) * d + i) = weights[int(k)] * vec(u).adjoint();
    }
  }
  return r;
}

ComplexMatrix r_matrix(const UnitaryFrameSet& ufs, const PriorWeights& weights) {
  return r_matrix(ufs.spin(), ufs.frames(), weights);
}

RealMatrix gamma_prime_gram(const UnitaryFrameSet& ufs) {
  const Spin spin = ufs.spin();
  const int nl = spin.two_j();
  const int n = ufs.size() * nl;
  const CoeffTable f(spin);
  std::vector<ComplexMatrix> s;
  s.reserve(n);
  for (const auto& u : ufs.frames()) {
    for (int L = 1; L <= nl; ++L) s.push_back(s_operator(f, L, u).mat);
  }
  RealMatrix g(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      // Both operators are Hermitian, so the trace is real.
      g(a, b) = g(b, a) = (s[a] * s[b]).trace().real();
    }
  }
  return g;
}

double gamma_prime(const UnitaryFrameSet& ufs) {
  if (ufs.spin().two_j() == 0) return 1.0;
  return gamma_prime_gram(ufs).partialPivLu().determinant();
}

double mu_bound(double gamma) {
  if (!(gamma > 0.0)) return std::numeric_limits<double>::infinity();
  const double s = std::sqrt(std::max(0.0, 1.0 - gamma));
  return (1.0 + s) / (1.0 - s);
}

ProbVector sun_forward(const DensityMatrix& rho, const UnitaryFrameSet& ufs,
                       const PriorWeights& weights) {
  std::vector<Frame> frames(ufs.frames().begin(), ufs.frames().end());
  return prob_vector(rho, std::span<const Frame>(frames), weights);
}

ComplexMatrix reconstruct_pinv_operator(const ProbVector& p,
                                        const UnitaryFrameSet& ufs,
                                        const PriorWeights& weights) {
  const Spin spin = ufs.spin();
  if (p.spin() != spin || p.n_rotations() != ufs.size()) {
    throw DomainError("reconstruct_pinv: probability vector does not match "
                      "the frame set");
  }
  const ComplexMatrix r = r_matrix(ufs, weights);
  const int unknowns = spin.dim() * spin.dim();
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(r);
  cod.setThreshold(1e-8);
  if (cod.rank() < unknowns) {
    throw FeasibilityError("reconstruct_pinv: R has rank " +
                           std::to_string(cod.rank()) + " < " +
                           std::to_string(unknowns));
  }
  ComplexVector rhs(p.size());
  for (int i = 0; i < p.size(); ++i) rhs(i) = p.values()[size_t(i)];
  const ComplexMatrix rho = unvec(cod.solve(rhs), spin.dim());
  return 0.5 * (rho + rho.adjoint());
}

DensityMatrix reconstruct_pinv(const ProbVector& p, const UnitaryFrameSet& ufs,
                               const PriorWeights& weights) {
  return DensityMatrix::from_matrix(
      ufs.spin(), reconstruct_pinv_operator(p, ufs, weights), 1e-9, 1e-9);
}

}  // namespace spinportrait
