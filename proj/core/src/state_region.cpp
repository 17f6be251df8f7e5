#include "spinportrait/state_region.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "spinportrait/errors.hpp"

namespace spinportrait {

double min_principal_minor(const ComplexMatrix& m) {
  const int d = static_cast<int>(m.rows());
  if (d > 20) throw DomainError("min_principal_minor: matrix too large");
  double lowest = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    const int n = static_cast<int>(idx.size());
    ComplexMatrix sub(n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) sub(a, b) = m(idx[a], idx[b]);
    }
    // Principal minors of a Hermitian matrix are real.
    lowest = std::min(lowest, sub.partialPivLu().determinant().real());
  }
  return lowest;
}

bool psd_sylvester(const ComplexMatrix& m, double tol) {
  return min_principal_minor(m) >= -tol;
}

RegionVerdict is_quantum(const ProbVector& p_eq, const Su2Scheme& scheme,
                         double tol, PsdMethod method) {
  const ComplexMatrix rho = scheme.reconstruct_operator(p_eq);
  const bool consistent = p_eq.has_equal_weights(1e-9);
  const double lam = min_eigenvalue(rho);
  const bool psd = method == PsdMethod::Eigenvalue ? lam >= -tol
                                                   : psd_sylvester(rho, tol);
  return {consistent && psd, lam, lam + tol, consistent};
}

RegionVerdict is_quantum(const ProbVector& p_eq, const DirectionSet& ds,
                         double tol, PsdMethod method) {
  return is_quantum(p_eq, Su2Scheme(ds), tol, method);
}

namespace {

void check_orthonormal_triad(const DirectionSet& ds) {
  if (ds.spin().two_j() != 1) {
    throw DomainError("qubit ball test: needs spin 1/2");
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (std::abs(ds[a].cartesian().dot(ds[b].cartesian())) > 1e-10) {
        throw DomainError("qubit ball test: the triad is not orthonormal");
      }
    }
  }
}

}  // namespace

double qubit_ball_radius2(const ProbVector& p_eq, const DirectionSet& ds) {
  check_orthonormal_triad(ds);
  double r2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double d = p_eq(k, 0) - 1.0 / 6.0;
    r2 += d * d;
  }
  return r2;
}

bool qubit_ball_test(const ProbVector& p_eq, const DirectionSet& ds,
                     double tol) {
  return qubit_ball_radius2(p_eq, ds) <= kQubitBallRadius2 + tol;
}

std::array<double, 3> qubit_region_inequalities(const ProbVector& p_eq,
                                                const DirectionSet& ds) {
  if (ds.spin().two_j() != 1 || p_eq.spin() != ds.spin()) {
    throw DomainError("qubit_region_inequalities: needs spin 1/2");
  }
  const auto l = dual_vectors(ds.dirs());
  const double a = 3.0 * (p_eq(0, 0) + p_eq(0, 1));
  Vec3 v = Vec3::Zero();
  for (int k = 0; k < 3; ++k) v += 3.0 * (p_eq(k, 0) - p_eq(k, 1)) * l[k];
  return {0.5 * (a + v.z()), 0.25 * (a * a - v.squaredNorm()),
          0.5 * (a - v.z())};
}

void SliceSpec::validate(Spin spin, int n_rotations) const {
  if (axes.empty() || axes.size() > 3) {
    throw ConfigError("slice: need 1 to 3 free axes, got " +
                      std::to_string(axes.size()));
  }
  std::map<std::pair<int, int>, int> used;
  auto claim = [&](int k, int two_m) {
    if (k < 0 || k >= n_rotations || !spin.is_projection(two_m)) {
      throw ConfigError("slice: entry (k = " + std::to_string(k) +
                        ", 2m = " + std::to_string(two_m) +
                        ") is not part of the vector");
    }
    if (used[{k, two_m}]++ > 0) {
      throw ConfigError("slice: entry (k = " + std::to_string(k) +
                        ", 2m = " + std::to_string(two_m) +
                        ") is listed twice");
    }
  };
  for (const auto& f : fixed) {
    claim(f.k, f.two_m);
    if (!std::isfinite(f.value)) throw ConfigError("slice: non-finite value");
  }
  for (const auto& a : axes) {
    claim(a.k, a.two_m);
    if (!(std::isfinite(a.lo) && std::isfinite(a.hi) && a.lo < a.hi)) {
      throw ConfigError("slice: axis range must satisfy lo < hi");
    }
  }
  for (int k = 0; k < n_rotations; ++k) {
    int open = 0;
    for (int two_m : spin.projections()) open += used.count({k, two_m}) ? 0 : 1;
    if (open != 1) {
      throw ConfigError("slice: block " + std::to_string(k) + " leaves " +
                        std::to_string(open) +
                        " entries undetermined; exactly one is required");
    }
  }
}

SliceSpec SliceSpec::qubit_cube() {
  SliceSpec s;
  for (int k = 0; k < 3; ++k) s.axes.push_back({k, 1, 0.0, 1.0 / 3.0});
  return s;
}

SliceSpec SliceSpec::qutrit_cut(double c) {
  SliceSpec s;
  const double block = 1.0 / 5.0;
  if (!(c >= 0.0 && c < block)) {
    throw ConfigError("slice: qutrit cut constant must lie in [0, 1/5)");
  }
  for (int k = 0; k < 3; ++k) s.axes.push_back({k, 2, 0.0, block - c});
  s.fixed.push_back({3, 2, c});
  s.fixed.push_back({4, 2, c});
  for (int k = 0; k < 5; ++k) s.fixed.push_back({k, -2, c});
  return s;
}

DirectionSet qutrit_cut_directions() {
  const double c = 1.0 / std::sqrt(3.0);
  // Three unit vectors around +z with pairwise dot product c.
  const double s2 = 2.0 * (1.0 - c) / 3.0;
  const double sa = std::sqrt(s2);
  const double ca = std::sqrt(1.0 - s2);
  std::vector<Vec3> v;
  for (int i = 0; i < 3; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / 3.0;
    v.emplace_back(sa * std::cos(phi), sa * std::sin(phi), ca);
  }
  auto reflect = [](const Vec3& x, const Vec3& a, const Vec3& b) {
    const Vec3 u = a.cross(b).normalized();
    return Vec3(x - 2.0 * x.dot(u) * u);
  };
  // n4 keeps its overlaps with n1, n2; n5 with n1, n3.
  v.push_back(reflect(v[2], v[0], v[1]));
  v.push_back(reflect(v[1], v[0], v[2]));
  std::vector<Direction> dirs;
  for (const auto& x : v) dirs.push_back(Direction::from_cartesian(x));
  return DirectionSet(Spin(2), std::move(dirs));
}

DirectionSet qubit_triad_with_triple(double triple) {
  if (!(triple > 0.0 && triple <= 1.0)) {
    throw DomainError("triad: triple product must lie in (0, 1]");
  }
  const Vec3 n3(0.0, triple, std::sqrt(std::max(0.0, 1.0 - triple * triple)));
  return DirectionSet(Spin(1), {Direction::plus_z(), Direction::plus_x(),
                                Direction::from_cartesian(n3)});
}

ProbVector slice_point(Spin spin, int n_rotations, const SliceSpec& slice,
                       const std::vector<double>& coords) {
  if (coords.size() != slice.axes.size()) {
    throw ConfigError("slice: coordinate count does not match the axes");
  }
  const int d = spin.dim();
  std::vector<double> values(size_t(n_rotations) * d, 0.0);
  std::vector<char> set(values.size(), 0);
  auto at = [&](int k, int two_m) { return size_t(k * d + spin.index_of(two_m)); };
  for (const auto& f : slice.fixed) {
    values[at(f.k, f.two_m)] = f.value;
    set[at(f.k, f.two_m)] = 1;
  }
  for (size_t i = 0; i < coords.size(); ++i) {
    values[at(slice.axes[i].k, slice.axes[i].two_m)] = coords[i];
    set[at(slice.axes[i].k, slice.axes[i].two_m)] = 1;
  }
  const double block = 1.0 / n_rotations;
  for (int k = 0; k < n_rotations; ++k) {
    double sum = 0.0;
    int open = -1;
    for (int i = 0; i < d; ++i) {
      if (set[size_t(k * d + i)]) {
        sum += values[size_t(k * d + i)];
      } else {
        open = i;
      }
    }
    if (open >= 0) values[size_t(k * d + open)] = block - sum;
  }
  return ProbVector::unchecked(spin, n_rotations, std::move(values));
}

std::vector<RegionPoint> sample_region(const Su2Scheme& scheme,
                                       const SliceSpec& slice, int resolution,
                                       double tol) {
  const Spin spin = scheme.spin();
  const int nu = scheme.n_rotations();
  slice.validate(spin, nu);
  if (resolution < 2) throw ConfigError("region: resolution must be >= 2");

  const size_t dims = slice.axes.size();
  size_t total = 1;
  for (size_t a = 0; a < dims; ++a) total *= size_t(resolution);

  std::vector<RegionPoint> out;
  out.reserve(total);
  std::vector<int> idx(dims, 0);
  for (size_t p = 0; p < total; ++p) {
    std::vector<double> coords(dims);
    for (size_t a = 0; a < dims; ++a) {
      const auto& ax = slice.axes[a];
      coords[a] = ax.lo + (ax.hi - ax.lo) * idx[a] / (resolution - 1);
    }
    const RegionVerdict v =
        is_quantum(slice_point(spin, nu, slice, coords), scheme, tol);
    out.push_back({std::move(coords), v.is_quantum, v.min_eigenvalue});
    for (size_t a = dims; a-- > 0;) {
      if (++idx[a] < resolution) break;
      idx[a] = 0;
    }
  }
  return out;
}

void write_region_csv(std::ostream& out, const std::vector<RegionPoint>& pts) {
  const size_t dims = pts.empty() ? 0 : pts.front().coords.size();
  for (size_t a = 0; a < dims; ++a) out << "coord" << (a + 1) << ',';
  out << "is_quantum,min_eig\n";
  std::ostringstream line;
  line.precision(17);
  for (const auto& p : pts) {
    line.str("");
    for (double c : p.coords) line << c << ',';
    line << (p.is_quantum ? 1 : 0) << ',' << p.min_eigenvalue << '\n';
    out << line.str();
  }
}

}  // namespace spinportrait
