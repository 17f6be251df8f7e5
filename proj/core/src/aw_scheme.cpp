#include "spinportrait/aw_scheme.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "spinportrait/errors.hpp"
#include "spinportrait/tomography.hpp"

namespace spinportrait {

AWGrid::AWGrid(Spin spin, std::vector<double> thetas, double delta)
    : spin_(spin), thetas_(std::move(thetas)), delta_(delta) {
  if (static_cast<int>(thetas_.size()) != spin.dim()) {
    throw DomainError("aw grid: need " + std::to_string(spin.dim()) +
                      " polar angles");
  }
  for (size_t q = 0; q < thetas_.size(); ++q) {
    if (!(thetas_[q] > 0.0 && thetas_[q] < std::numbers::pi)) {
      throw DomainError("aw grid: polar angles must lie in (0, pi)");
    }
    for (size_t p = 0; p < q; ++p) {
      if (std::abs(thetas_[p] - thetas_[q]) < 1e-12) {
        throw DomainError("aw grid: polar angles must be distinct");
      }
    }
  }
  if (!(delta_ > 0.0 && delta_ <= 1.0 / spin.dim() + 1e-15)) {
    throw DomainError("aw grid: delta must lie in (0, 1/(2j+1)]");
  }
}

AWGrid AWGrid::standard(Spin spin) {
  std::vector<double> thetas;
  for (int q = 0; q < spin.dim(); ++q) {
    thetas.push_back(std::numbers::pi * (q + 1) / (spin.dim() + 1));
  }
  return AWGrid(spin, std::move(thetas), 1.0 / spin.dim());
}

std::vector<Direction> aw_directions(const AWGrid& grid) {
  const int n = grid.spin().dim();
  std::vector<Direction> out;
  out.reserve(n * n);
  for (int q = 0; q < n; ++q) {
    for (int r = 0; r < n; ++r) {
      const double phi = 2.0 * std::numbers::pi * (r + q * grid.delta()) / n;
      out.emplace_back(grid.thetas()[q], phi);
    }
  }
  return out;
}

ComplexMatrix aw_matrix(Spin spin, std::span<const Direction> dirs) {
  const int d = spin.dim();
  ComplexMatrix m(static_cast<int>(dirs.size()), d * d);
  for (size_t k = 0; k < dirs.size(); ++k) {
    const ComplexVector top = rotation(spin, dirs[k]).mat.col(0);
    m.row(int(k)) = vec(top * top.adjoint()).adjoint();
  }
  return m;
}

std::vector<double> aw_forward(const DensityMatrix& rho,
                               std::span<const Direction> dirs) {
  std::vector<double> w;
  w.reserve(dirs.size());
  for (const auto& n : dirs) w.push_back(tomogram(rho, rho.spin().two_j(), n));
  return w;
}

ComplexMatrix aw_reconstruct_operator(Spin spin, std::span<const double> w,
                                      std::span<const Direction> dirs) {
  const int n = spin.dim() * spin.dim();
  if (static_cast<int>(dirs.size()) != n || static_cast<int>(w.size()) != n) {
    throw DomainError("aw_reconstruct: need " + std::to_string(n) +
                      " directions and values");
  }
  const ComplexMatrix m = aw_matrix(spin, dirs);
  const RealVector s = singular_values(m);
  const double ratio = s(s.size() - 1) / s(0);
  if (!(ratio >= 1e-12)) {
    throw FeasibilityError("aw_reconstruct: M is singular (sigma_min/sigma_max = " +
                               std::to_string(ratio) + ")",
                           -1, ratio);
  }
  ComplexVector rhs(n);
  for (int i = 0; i < n; ++i) rhs(i) = w[size_t(i)];
  const ComplexMatrix rho = unvec(m.partialPivLu().solve(rhs), spin.dim());
  return 0.5 * (rho + rho.adjoint());
}

DensityMatrix aw_reconstruct(Spin spin, std::span<const double> w,
                             std::span<const Direction> dirs) {
  return DensityMatrix::from_matrix(spin, aw_reconstruct_operator(spin, w, dirs),
                                    1e-9, 1e-9);
}

std::vector<double> aw_normalize(std::span<const double> w) {
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(sum > 0.0)) throw DegeneratePriorError("aw_normalize: zero total");
  std::vector<double> out(w.begin(), w.end());
  for (double& x : out) x /= sum;
  return out;
}

DensityMatrix aw_reconstruct_normalized(Spin spin,
                                        std::span<const double> w_normalized,
                                        std::span<const Direction> dirs) {
  ComplexMatrix x = aw_reconstruct_operator(spin, w_normalized, dirs);
  const double tr = x.trace().real();
  if (!(std::abs(tr) > 0.0)) {
    throw InvariantError("aw_reconstruct_normalized: zero trace");
  }
  x /= tr;
  return DensityMatrix::from_matrix(spin, std::move(x), 1e-9, 1e-9);
}

DirectionSet newton_young_directions(Spin spin, double theta) {
  for (int L = 0; L <= spin.two_j(); ++L) {
    for (int m = 0; m <= L; ++m) {
      const double p = std::sph_legendre(unsigned(L), unsigned(m), theta);
      if (std::abs(p) < 1e-10) {
        throw FeasibilityError("newton-young: P_" + std::to_string(L) + "^" +
                                   std::to_string(m) +
                                   "(cos theta) vanishes at theta = " +
                                   std::to_string(theta),
                               L, p);
      }
    }
  }
  const int n = spin.direction_count();
  std::vector<Direction> dirs;
  dirs.reserve(n);
  for (int k = 0; k < n; ++k) {
    dirs.emplace_back(theta, 2.0 * std::numbers::pi * k / n);
  }
  DirectionSet ds(spin, std::move(dirs));
  const auto dets = gram_determinants(ds);
  for (size_t i = 0; i < dets.size(); ++i) {
    if (!(std::abs(dets[i]) >= Su2Scheme::kDetTol)) {
      throw FeasibilityError("newton-young: shell L = " + std::to_string(i + 1) +
                                 " Gram determinant " + std::to_string(dets[i]),
                             int(i + 1), dets[i]);
    }
  }
  return ds;
}

}  // namespace spinportrait
