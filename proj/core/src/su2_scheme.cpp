#include "spinportrait/su2_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinportrait/errors.hpp"
#include "spinportrait/tomography.hpp"

namespace spinportrait {

DirectionSet::DirectionSet(Spin spin, std::vector<Direction> dirs)
    : spin_(spin), dirs_(std::move(dirs)) {
  if (static_cast<int>(dirs_.size()) != spin.direction_count()) {
    throw DomainError("direction set: 2j = " + std::to_string(spin.two_j()) +
                      " needs " + std::to_string(spin.direction_count()) +
                      " directions, got " + std::to_string(dirs_.size()));
  }
}

std::span<const Direction> DirectionSet::shell(int L) const {
  if (L < 0 || L > spin_.two_j()) {
    throw DomainError("direction set: no shell " + std::to_string(L));
  }
  return std::span<const Direction>(dirs_).first(size_t(2 * L + 1));
}

RealMatrix gram(int L, std::span<const Direction> dirs) {
  if (L < 0) throw DomainError("gram: negative degree");
  const int n = static_cast<int>(dirs.size());
  std::vector<Vec3> v;
  v.reserve(n);
  for (const auto& d : dirs) v.push_back(d.cartesian());
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (int k = i + 1; k < n; ++k) {
      g(i, k) = g(k, i) = legendre(L, std::clamp(v[i].dot(v[k]), -1.0, 1.0));
    }
  }
  return g;
}

RealMatrix gram(int L, const DirectionSet& ds) { return gram(L, ds.shell(L)); }

std::vector<double> gram_determinants(const DirectionSet& ds) {
  std::vector<double> out;
  for (int L = 1; L <= ds.spin().two_j(); ++L) {
    out.push_back(gram(L, ds).partialPivLu().determinant());
  }
  return out;
}

double feasibility(const DirectionSet& ds) {
  double prod = 1.0;
  for (double d : gram_determinants(ds)) prod *= d;
  return prod;
}

RealMatrix legendre_matrix(int q, const DirectionSet& ds) {
  const auto dirs = ds.shell(q);
  RealMatrix out(2 * q + 1, 2 * q + 1);
  for (int i = 0; i < 2 * q + 1; ++i) {
    const double x = std::cos(dirs[i].theta());
    const double phi = dirs[i].phi();
    out(i, 0) = assoc_legendre(q, 0, x);
    for (int m = 1; m <= q; ++m) {
      const double p = assoc_legendre(q, m, x);
      out(i, 2 * m - 1) = p * std::cos(m * phi);
      out(i, 2 * m) = p * std::sin(m * phi);
    }
  }
  return out;
}

double legendre_determinant_product(const DirectionSet& ds) {
  double prod = 1.0;
  for (int q = 1; q <= ds.spin().two_j(); ++q) {
    prod *= legendre_matrix(q, ds).partialPivLu().determinant();
  }
  return prod;
}

ComplexMatrix q_matrix(Spin spin, std::span<const Direction> dirs,
                       const PriorWeights& weights) {
  if (static_cast<int>(dirs.size()) != weights.size()) {
    throw DomainError("q_matrix: direction and weight counts differ");
  }
  const int d = spin.dim();
  ComplexMatrix q(static_cast<int>(dirs.size()) * d, d * d);
  for (size_t k = 0; k < dirs.size(); ++k) {
    const ComplexMatrix r = rotation(spin, dirs[k]).mat;
    for (int i = 0; i < d; ++i) {
      const ComplexVector col = r.col(i);
      const ComplexMatrix u = col * col.adjoint();
      q.row(int(k) * d + i) = weights[int(k)] * vec(u).adjoint();
    }
  }
  return q;
}

ComplexMatrix q_matrix(const DirectionSet& ds, const PriorWeights& weights) {
  return q_matrix(ds.spin(), ds.dirs(), weights);
}

double q_condition(const DirectionSet& ds) {
  return condition_number(q_matrix(ds, PriorWeights::uniform(ds.size())));
}

Su2Scheme::Su2Scheme(DirectionSet ds, double det_tol)
    : ds_(std::move(ds)), f_(ds_.spin()) {
  const Spin spin = ds_.spin();
  std::vector<UnitaryOp> rot;
  rot.reserve(ds_.size());
  for (const auto& n : ds_.dirs()) rot.push_back(rotation(spin, n));

  for (int L = 0; L <= spin.two_j(); ++L) {
    const int n = 2 * L + 1;
    const RealMatrix g = gram(L, ds_);
    const Eigen::PartialPivLU<RealMatrix> lu(g);
    const double det = lu.determinant();
    if (!(std::abs(det) >= det_tol)) {
      throw FeasibilityError("shell L = " + std::to_string(L) +
                                 ": Gram determinant " + std::to_string(det) +
                                 " is numerically zero",
                             L, det);
    }
    const RealMatrix inv = lu.inverse();
    std::vector<ComplexMatrix> s;
    s.reserve(n);
    for (int k = 0; k < n; ++k) s.push_back(s_operator(f_, L, rot[k]).mat);
    std::vector<ComplexMatrix> dual;
    dual.reserve(n);
    for (int k = 0; k < n; ++k) {
      ComplexMatrix e = ComplexMatrix::Zero(spin.dim(), spin.dim());
      for (int kp = 0; kp < n; ++kp) e += inv(k, kp) * s[kp];
      dual.push_back(std::move(e));
    }
    s_.push_back(std::move(s));
    dual_.push_back(std::move(dual));
  }
}

void Su2Scheme::check_direction(int k) const {
  if (k < 0 || k >= ds_.size()) {
    throw DomainError("su2 scheme: no direction " + std::to_string(k));
  }
}

const ComplexMatrix& Su2Scheme::dual(int L, int k) const {
  if (L < 0 || L > spin().two_j() || k < 0 || k >= 2 * L + 1) {
    throw DomainError("su2 scheme: direction " + std::to_string(k) +
                      " is not in shell " + std::to_string(L));
  }
  return dual_[L][k];
}

const ComplexMatrix& Su2Scheme::s_op(int L, int k) const {
  if (L < 0 || L > spin().two_j() || k < 0 || k >= 2 * L + 1) {
    throw DomainError("su2 scheme: direction " + std::to_string(k) +
                      " is not in shell " + std::to_string(L));
  }
  return s_[L][k];
}

HermitianOp Su2Scheme::l_dequantizer(int L, int k, int two_m) const {
  const double c = f_.at(L, two_m) / n_rotations();
  return HermitianOp(c * s_op(L, k));
}

HermitianOp Su2Scheme::l_quantizer(int L, int k, int two_m) const {
  const double c = n_rotations() * f_.at(L, two_m);
  return HermitianOp(c * dual(L, k));
}

HermitianOp Su2Scheme::quantizer(int k, int two_m) const {
  check_direction(k);
  const int idx = spin().index_of(two_m);
  ComplexMatrix acc = ComplexMatrix::Zero(spin().dim(), spin().dim());
  for (int L = DirectionSet::first_shell(k); L <= spin().two_j(); ++L) {
    acc += (n_rotations() * f_(L, idx)) * dual_[L][k];
  }
  return HermitianOp(std::move(acc));
}

HermitianOp Su2Scheme::dequantizer(int k, int two_m) const {
  check_direction(k);
  HermitianOp u = spinportrait::dequantizer(spin(), two_m, ds_[k]);
  u.mat /= n_rotations();
  return u;
}

ComplexMatrix Su2Scheme::reconstruct_operator(const ProbVector& p_eq) const {
  if (p_eq.spin() != spin() || p_eq.n_rotations() != n_rotations()) {
    throw DomainError("su2 scheme: probability vector does not match the "
                      "direction set");
  }
  const int d = spin().dim();
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  // rho = sum_L sum_k c_{Lk} E_L(k), c_{Lk} = (4j+1) sum_m P(m, k) f_L(m).
  for (int L = 0; L <= spin().two_j(); ++L) {
    for (int k = 0; k < 2 * L + 1; ++k) {
      double c = 0.0;
      for (int i = 0; i < d; ++i) c += p_eq(k, i) * f_(L, i);
      rho += (n_rotations() * c) * dual_[L][k];
    }
  }
  return rho;
}

DensityMatrix Su2Scheme::reconstruct(const ProbVector& p_eq) const {
  ComplexMatrix rho = reconstruct_operator(p_eq);
  if (!p_eq.has_equal_weights()) {
    throw DomainError(
        "su2 scheme: blocks are not equal-weight; normalize first");
  }
  return DensityMatrix::from_matrix(spin(), std::move(rho), 1e-10, 1e-10);
}

HermitianOp l_quantizer(int L, int k, int two_m, const DirectionSet& ds) {
  return Su2Scheme(ds).l_quantizer(L, k, two_m);
}

HermitianOp quantizer(int k, int two_m, const DirectionSet& ds) {
  return Su2Scheme(ds).quantizer(k, two_m);
}

DensityMatrix reconstruct(const ProbVector& p_eq, const DirectionSet& ds) {
  return Su2Scheme(ds).reconstruct(p_eq);
}

std::vector<Vec3> dual_vectors(std::span<const Direction> triad) {
  if (triad.size() != 3) throw DomainError("dual_vectors: need three directions");
  const Vec3 n1 = triad[0].cartesian();
  const Vec3 n2 = triad[1].cartesian();
  const Vec3 n3 = triad[2].cartesian();
  const double triple = n1.dot(n2.cross(n3));
  if (std::abs(triple) < 1e-12) {
    throw FeasibilityError("dual_vectors: coplanar triad", 1, triple * triple);
  }
  return {n2.cross(n3) / triple, n3.cross(n1) / triple, n1.cross(n2) / triple};
}

ComplexMatrix qubit_closed_form(const ProbVector& p_eq,
                                const DirectionSet& ds) {
  if (ds.spin().two_j() != 1 || p_eq.spin() != ds.spin() ||
      p_eq.n_rotations() != 3) {
    throw DomainError("qubit_closed_form: needs spin 1/2 over three directions");
  }
  const auto l = dual_vectors(ds.dirs());
  const AngularMomentum j = angular_momentum(ds.spin());
  const double scale = 3.0;  // w = (4j + 1) P_eq
  ComplexMatrix rho = ComplexMatrix::Identity(2, 2) * 0.5 * scale *
                      (p_eq(0, 0) + p_eq(0, 1));
  for (int k = 0; k < 3; ++k) {
    const double diff = scale * (p_eq(k, 0) - p_eq(k, 1));
    rho += diff * j.along(l[k]);
  }
  return rho;
}

}  // namespace spinportrait
