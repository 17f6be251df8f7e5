#include "spinportrait/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spinportrait {

ComplexVector vec(const ComplexMatrix& m) {
  return ComplexVector(
      Eigen::Map<const ComplexVector>(m.data(), m.rows() * m.cols()));
}

ComplexMatrix unvec(const ComplexVector& v, int dim) {
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix conjugate_diagonal(const ComplexMatrix& v,
                                 const RealVector& values) {
  return v * values.cast<Complex>().asDiagonal() * v.adjoint();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& m) {
  const ComplexMatrix herm = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm,
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

RealVector singular_values(const ComplexMatrix& m) {
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double condition_number(const ComplexMatrix& m) {
  const RealVector s = singular_values(m);
  if (s.size() == 0) return std::numeric_limits<double>::infinity();
  const double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

int numerical_rank(const ComplexMatrix& m, double rel_threshold) {
  const RealVector s = singular_values(m);
  if (s.size() == 0) return 0;
  const double cut = rel_threshold * s(0);
  return static_cast<int>(std::count_if(s.begin(), s.end(),
                                        [cut](double x) { return x > cut; }));
}

}  // namespace spinportrait
