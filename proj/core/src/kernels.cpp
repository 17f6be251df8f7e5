#include "spinportrait/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinportrait/errors.hpp"

namespace spinportrait {

namespace {

// Tr(A B) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array() * b.transpose().array()).sum();
}

}  // namespace

Kernels::Kernels(Su2Scheme scheme)
    : scheme_(std::move(scheme)),
      n_(scheme_.n_rotations()),
      d_(scheme_.spin().dim()) {
  const Spin spin = scheme_.spin();
  quant_.reserve(n_ * d_);
  dequant_.reserve(n_ * d_);
  for (int k = 0; k < n_; ++k) {
    const UnitaryOp r = rotation(spin, scheme_.directions()[k]);
    for (int i = 0; i < d_; ++i) {
      const int two_m = spin.two_m_at(i);
      quant_.push_back(scheme_.quantizer(k, two_m).mat);
      const ComplexVector col = r.mat.col(i);
      dequant_.push_back(col * col.adjoint());
    }
  }
  for (int L = 0; L <= spin.two_j(); ++L) {
    gram_inv_.push_back(gram(L, scheme_.directions()).inverse());
  }
}

int Kernels::flat(int k, int two_m) const {
  if (k < 0 || k >= n_) {
    throw DomainError("kernels: no direction " + std::to_string(k));
  }
  return k * d_ + spin().index_of(two_m);
}

Complex Kernels::star_kernel(int m3, int k3, int m2, int k2, int m1,
                             int k1) const {
  const ComplexMatrix prod = quant_[flat(k1, m1)] * quant_[flat(k2, m2)];
  return trace_product(prod, dequant_[flat(k3, m3)]) / double(n_);
}

Complex Kernels::star_kernel_expanded(int m3, int k3, int m2, int k2, int m1,
                                      int k1) const {
  const CoeffTable& f = scheme_.coefficients();
  const int top = spin().two_j();
  flat(k1, m1);
  flat(k2, m2);
  flat(k3, m3);
  // S_{L3}(n_k3) is needed for every L3, including shells that do not
  // contain k3, so it comes from the table rather than the scheme cache.
  const UnitaryOp r3 = rotation(spin(), scheme_.directions()[k3]);
  std::vector<ComplexMatrix> s3;
  for (int l3 = 0; l3 <= top; ++l3) s3.push_back(s_operator(f, l3, r3).mat);

  Complex acc = 0.0;
  for (int l1 = DirectionSet::first_shell(k1); l1 <= top; ++l1) {
    for (int l2 = DirectionSet::first_shell(k2); l2 <= top; ++l2) {
      for (int l3 = 0; l3 <= top; ++l3) {
        const double coef = f.at(l1, m1) * f.at(l2, m2) * f.at(l3, m3);
        if (coef == 0.0) continue;
        Complex inner = 0.0;
        for (int a = 0; a < 2 * l1 + 1; ++a) {
          for (int b = 0; b < 2 * l2 + 1; ++b) {
            const ComplexMatrix s12 = scheme_.s_op(l1, a) * scheme_.s_op(l2, b);
            inner += gram_inv_[l1](k1, a) * gram_inv_[l2](k2, b) *
                     trace_product(s12, s3[l3]);
          }
        }
        acc += coef * inner;
      }
    }
  }
  return double(n_) * acc;
}

Symbol Kernels::star_apply(const Symbol& p1, const Symbol& p2) const {
  if (p1.size() != symbol_size() || p2.size() != symbol_size()) {
    throw DomainError("star_apply: symbol length does not match the set");
  }
  const int size = symbol_size();
  // Each (a, b) pair forms the two-quantizer product once and reuses it for
  // every output index.
  Symbol out = Symbol::Zero(size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const Complex w = p1(a) * p2(b);
      if (w == Complex(0.0)) continue;
      const ComplexMatrix prod = quant_[a] * quant_[b];
      for (int c = 0; c < size; ++c) {
        out(c) += w * trace_product(prod, dequant_[c]) / double(n_);
      }
    }
  }
  return out;
}

Symbol Kernels::symbol_of(const ComplexMatrix& a) const {
  if (a.rows() != d_ || a.cols() != d_) {
    throw DomainError("symbol_of: operator dimension does not match the spin");
  }
  Symbol out(symbol_size());
  for (int c = 0; c < symbol_size(); ++c) {
    out(c) = trace_product(a, dequant_[c]) / double(n_);
  }
  return out;
}

ComplexMatrix Kernels::operator_of(const Symbol& p) const {
  if (p.size() != symbol_size()) {
    throw DomainError("operator_of: symbol length does not match the set");
  }
  ComplexMatrix acc = ComplexMatrix::Zero(d_, d_);
  for (int c = 0; c < symbol_size(); ++c) acc += p(c) * quant_[c];
  return acc;
}

Symbol Kernels::identity_symbol() const {
  return Symbol::Constant(symbol_size(), Complex(1.0 / n_));
}

double Kernels::kernel_w_to_p(int m, int k, int m_prime,
                              const Direction& n_prime) const {
  const HermitianOp dq = quantizer_continuous(spin(), m_prime, n_prime);
  return trace_product(dq.mat, dequant_[flat(k, m)]).real() / n_;
}

double Kernels::kernel_w_to_p_expanded(int m, int k, int m_prime,
                                       const Direction& n_prime) const {
  flat(k, m);
  const CoeffTable& f = scheme_.coefficients();
  const double x = std::clamp(
      n_prime.cartesian().dot(scheme_.directions()[k].cartesian()), -1.0, 1.0);
  double acc = 0.0;
  for (int L = 0; L <= spin().two_j(); ++L) {
    acc += (2.0 * L + 1.0) * f.at(L, m_prime) * f.at(L, m) * legendre(L, x);
  }
  return acc / n_;
}

double Kernels::kernel_p_to_w(int m, const Direction& n, int m_prime,
                              int k_prime) const {
  const HermitianOp u = dequantizer(spin(), m, n);
  return trace_product(quant_[flat(k_prime, m_prime)], u.mat).real();
}

double Kernels::kernel_p_to_w_expanded(int m, const Direction& n, int m_prime,
                                       int k_prime) const {
  flat(k_prime, m_prime);
  spin().index_of(m);
  const CoeffTable& f = scheme_.coefficients();
  const Vec3 v = n.cartesian();
  double acc = 0.0;
  for (int L = DirectionSet::first_shell(k_prime); L <= spin().two_j(); ++L) {
    double inner = 0.0;
    for (int k = 0; k < 2 * L + 1; ++k) {
      const double x =
          std::clamp(scheme_.directions()[k].cartesian().dot(v), -1.0, 1.0);
      inner += gram_inv_[L](k_prime, k) * legendre(L, x);
    }
    acc += f.at(L, m_prime) * f.at(L, m) * inner;
  }
  return n_ * acc;
}

ProbVector Kernels::w_to_p(const TomogramFn& w, const SphereQuadrature& q) const {
  const SphereQuadrature need = SphereQuadrature::minimal(spin());
  if (q.n_theta < need.n_theta || q.n_phi < need.n_phi) {
    throw ConfigError("w_to_p: quadrature below the exactness threshold");
  }
  std::vector<double> acc(size_t(symbol_size()), 0.0);
  for (const SphereNode& node : sphere_nodes(q)) {
    for (int i = 0; i < d_; ++i) {
      const int m_prime = spin().two_m_at(i);
      const double wv = w(m_prime, node.direction);
      const HermitianOp dq = quantizer_continuous(spin(), m_prime, node.direction);
      for (int c = 0; c < symbol_size(); ++c) {
        acc[size_t(c)] +=
            node.weight * wv * trace_product(dq.mat, dequant_[c]).real() / n_;
      }
    }
  }
  return ProbVector::unchecked(spin(), n_, std::move(acc));
}

RealVector Kernels::p_to_w(const ProbVector& p_eq, const Direction& n) const {
  if (p_eq.spin() != spin() || p_eq.n_rotations() != n_) {
    throw DomainError("p_to_w: probability vector does not match the set");
  }
  RealVector out = RealVector::Zero(d_);
  for (int i = 0; i < d_; ++i) {
    const HermitianOp u = dequantizer(spin(), spin().two_m_at(i), n);
    for (int c = 0; c < symbol_size(); ++c) {
      out(i) += trace_product(quant_[c], u.mat).real() * p_eq.values()[size_t(c)];
    }
  }
  return out;
}

namespace {

void check_qubit(const DirectionSet& ds) {
  if (ds.spin().two_j() != 1) {
    throw DomainError("qubit kernel closed forms need spin 1/2");
  }
}

double half(int two_m) { return 0.5 * two_m; }

}  // namespace

Complex qubit_star_kernel(const DirectionSet& ds, int m3, int k3, int m2,
                          int k2, int m1, int k1) {
  check_qubit(ds);
  const auto l = dual_vectors(ds.dirs());
  const Vec3 n1 = ds[k1].cartesian();
  const double a = half(m1);
  const double b = half(m2);
  const double c = half(m3);
  const double d3 = k3 == 0 ? 1.0 : 0.0;
  const double d2 = k2 == 0 ? 1.0 : 0.0;
  const double re = 0.25 * d3 * d2 + d3 * b * a * l[k2].dot(n1) +
                    d2 * c * a * l[k3].dot(n1) + c * b * l[k3].dot(l[k2]);
  const double im = 2.0 * c * b * a * l[k3].cross(l[k2]).dot(n1);
  return 3.0 * Complex(re, im);
}

double qubit_kernel_w_to_p(const DirectionSet& ds, int m, int k, int m_prime,
                           const Direction& n_prime) {
  check_qubit(ds);
  return 1.0 / 6.0 + 2.0 * half(m_prime) * half(m) *
                         n_prime.cartesian().dot(ds[k].cartesian());
}

double qubit_kernel_p_to_w(const DirectionSet& ds, int m, const Direction& n,
                           int m_prime, int k_prime) {
  check_qubit(ds);
  const auto l = dual_vectors(ds.dirs());
  return 3.0 * ((k_prime == 0 ? 0.5 : 0.0) +
                2.0 * half(m_prime) * half(m) * l[k_prime].dot(n.cartesian()));
}

}  // namespace spinportrait
