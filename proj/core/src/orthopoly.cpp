#include "spinportrait/orthopoly.hpp"

#include <cmath>
#include <string>

#include "spinportrait/errors.hpp"

namespace spinportrait {

namespace {

void check_degree(Spin spin, int L) {
  if (L < 0 || L > spin.two_j()) {
    throw DomainError("orthopoly: degree L = " + std::to_string(L) +
                      " outside [0, " + std::to_string(spin.two_j()) + "]");
  }
}

}  // namespace

CoeffTable::CoeffTable(Spin spin) : spin_(spin) {
  const int n = spin.dim();
  values_ = RealMatrix::Zero(n, n);

  // Column c is basis index c, i.e. m = j - c, i.e. x = j + m = n - 1 - c.
  // Centered variable: x - (n-1)/2 = m.
  RealVector centered(n);
  for (int c = 0; c < n; ++c) centered(c) = spin.m_at(c);

  const double nn = double(n) * n;
  auto b = [nn](int L) {
    const double l2 = double(L) * L;
    return l2 * (nn - l2) / (4.0 * (4.0 * l2 - 1.0));
  };

  values_.row(0).setConstant(1.0 / std::sqrt(double(n)));
  if (n > 1) {
    values_.row(1) = centered.transpose().array() * values_.row(0).array() /
                     std::sqrt(b(1));
  }
  for (int L = 1; L + 1 < n; ++L) {
    values_.row(L + 1) = (centered.transpose().array() * values_.row(L).array() -
                          std::sqrt(b(L)) * values_.row(L - 1).array()) /
                         std::sqrt(b(L + 1));
  }

  // Rows L span the polynomials of degree <= L, so two Gram-Schmidt sweeps
  // only remove the rounding drift of the recurrence at large j.
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (int L = 0; L < n; ++L) {
      auto r = values_.row(L);
      for (int P = 0; P < L; ++P) r -= r.dot(values_.row(P)) * values_.row(P);
      r /= r.norm();
    }
  }
  for (int L = 0; L < n; ++L) {
    if (values_(L, 0) < 0.0) values_.row(L) *= -1.0;
  }
}

double CoeffTable::at(int L, int two_m) const {
  check_degree(spin_, L);
  return values_(L, spin_.index_of(two_m));
}

CoeffTable coeff_table(Spin spin) { return CoeffTable(spin); }

double legendre(int L, double x) {
  if (L < 0) throw DomainError("legendre: negative degree");
  if (L == 0) return 1.0;
  double p0 = 1.0;
  double p1 = x;
  for (int l = 1; l < L; ++l) {
    const double p2 = ((2.0 * l + 1.0) * x * p1 - l * p0) / (l + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) {
    throw DomainError("assoc_legendre: need 0 <= m <= l");
  }
  return std::assoc_legendre(static_cast<unsigned>(l),
                             static_cast<unsigned>(m), x);
}

HermitianOp s_operator(const CoeffTable& table, int L, const UnitaryOp& v) {
  check_degree(table.spin(), L);
  return HermitianOp(conjugate_diagonal(v.mat, table.row(L)));
}

HermitianOp s_operator(Spin spin, int L, const Frame& frame) {
  check_degree(spin, L);
  return s_operator(CoeffTable(spin), L, frame_unitary(spin, frame));
}

}  // namespace spinportrait
