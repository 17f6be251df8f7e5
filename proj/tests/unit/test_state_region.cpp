#include <gtest/gtest.h>

#include <sstream>

#include "spinportrait/errors.hpp"
#include "spinportrait/portrait.hpp"
#include "spinportrait/state_region.hpp"
#include "support.hpp"

using namespace spinportrait;
using namespace sp_test;

namespace {

ProbVector qubit_point(double a, double b, double c) {
  return ProbVector::unchecked(Spin(1), 3, {a, 1.0 / 3 - a, b, 1.0 / 3 - b, c, 1.0 / 3 - c});
}

}  // namespace

TEST(IsQuantum, Examples) {
  const DirectionSet ds = orthogonal_triad();
  const auto centre = is_quantum(qubit_point(1.0 / 6, 1.0 / 6, 1.0 / 6), ds);
  EXPECT_TRUE(centre.is_quantum);
  EXPECT_TRUE(centre.consistent);
  EXPECT_NEAR(centre.min_eigenvalue, 0.5, 1e-14);

  const auto corner = is_quantum(qubit_point(1.0 / 3, 1.0 / 3, 1.0 / 3), ds);
  EXPECT_FALSE(corner.is_quantum);
  EXPECT_NEAR(corner.min_eigenvalue, (1.0 - std::sqrt(3.0)) / 2, 1e-14);
  EXPECT_LT(corner.margin, 0.0);

  const auto off = is_quantum(ProbVector::unchecked(Spin(1), 3, {0.2, 0.2, 0.1, 0.1, 0.2, 0.2}), ds);
  EXPECT_FALSE(off.consistent);
  EXPECT_FALSE(off.is_quantum);
}

TEST(IsQuantum, ForwardImagesAreInside) {
  Rng rng(1);
  for (int tj : {1, 2, 3}) {
    const Spin s(tj);
    const DirectionSet ds = random_feasible_set(s, rng);
    const Su2Scheme sch(ds);
    for (int t = 0; t < 300; ++t) {
      const auto rho = t % 3 ? random_density_matrix(s, rng) : random_pure_state(s, rng);
      const auto v = is_quantum(prob_vector(rho, ds.dirs(), PriorWeights::uniform(ds.size())), sch);
      EXPECT_TRUE(v.is_quantum);
      EXPECT_GE(v.margin, -1e-10);
    }
  }
}

TEST(IsQuantum, SylvesterAgreesAwayFromBoundary) {
  Rng rng(2);
  const Su2Scheme sch(qutrit_cut_directions());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int compared = 0;
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> v(15);
    for (int k = 0; k < 5; ++k) {
      double a = u(rng), b = u(rng), c = u(rng);
      const double tot = (a + b + c) * 5;
      v[3 * k] = a / tot;
      v[3 * k + 1] = b / tot;
      v[3 * k + 2] = c / tot;
    }
    const auto p = ProbVector::unchecked(Spin(2), 5, v);
    const auto eig = is_quantum(p, sch);
    if (std::abs(eig.min_eigenvalue) < 1e-6) continue;
    ++compared;
    EXPECT_EQ(eig.is_quantum, is_quantum(p, sch, 1e-10, PsdMethod::Sylvester).is_quantum);
  }
  EXPECT_GT(compared, 1900);
}

TEST(Sylvester, MinorsOfSmallMatrices) {
  ComplexMatrix m(2, 2);
  m << 2, 1, 1, 2;
  EXPECT_TRUE(psd_sylvester(m, 0.0));
  EXPECT_NEAR(min_principal_minor(m), 2.0, 1e-14);
  // Leading minors are nonnegative, but the (2,2) entry is not.
  ComplexMatrix n(2, 2);
  n << 0, 0, 0, -1;
  EXPECT_FALSE(psd_sylvester(n, 1e-12));
}

TEST(QubitBall, Examples) {
  const DirectionSet ds = orthogonal_triad();
  EXPECT_TRUE(qubit_ball_test(qubit_point(1.0 / 6, 1.0 / 6, 1.0 / 6), ds));
  const auto rho = DensityMatrix::from_matrix(Spin(1), bloch_state(Vec3(0, 0, 1)));
  const auto up = prob_vector(rho, ds.dirs(), PriorWeights::uniform(3));
  EXPECT_NEAR(qubit_ball_radius2(up, ds), kQubitBallRadius2, 1e-15);
  EXPECT_TRUE(qubit_ball_test(up, ds));
  EXPECT_NEAR(qubit_ball_radius2(qubit_point(1.0 / 3, 1.0 / 3, 1.0 / 3), ds), 1.0 / 12, 1e-15);
  EXPECT_FALSE(qubit_ball_test(qubit_point(1.0 / 3, 1.0 / 3, 1.0 / 3), ds));
  EXPECT_THROW(qubit_ball_radius2(up, qubit_triad_with_triple(0.5)), DomainError);
}

TEST(QubitBall, PureStatesLandOnTheSphere) {
  Rng rng(3);
  const DirectionSet ds = orthogonal_triad();
  for (int t = 0; t < 100; ++t) {
    const auto rho = random_pure_state(Spin(1), rng);
    const auto p = prob_vector(rho, ds.dirs(), PriorWeights::uniform(3));
    EXPECT_NEAR(qubit_ball_radius2(p, ds), kQubitBallRadius2, 1e-10);
    EXPECT_NEAR(is_quantum(p, ds).min_eigenvalue, 0.0, 1e-10);
  }
}

TEST(QubitBall, RayTransitionSatisfiesTheQuadric) {
  Rng rng(4);
  const Su2Scheme sch(orthogonal_triad());
  for (int t = 0; t < 20; ++t) {
    const Vec3 dir = random_direction(rng).cartesian();
    auto at = [&](double s) {
      return qubit_point(1.0 / 6 + s * dir.x(), 1.0 / 6 + s * dir.y(), 1.0 / 6 + s * dir.z());
    };
    double lo = 0.0, hi = 0.2;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (is_quantum(at(mid), sch, 0.0).is_quantum ? lo : hi) = mid;
    }
    EXPECT_NEAR(qubit_ball_radius2(at(lo), sch.directions()), kQubitBallRadius2, 1e-8);
  }
}

TEST(QubitInequalities, ExamplesAndAgreement) {
  const DirectionSet ds = orthogonal_triad();
  for (double r : qubit_region_inequalities(qubit_point(1.0 / 6, 1.0 / 6, 1.0 / 6), ds)) {
    EXPECT_GT(r, 0.0);
  }
  const auto up = prob_vector(DensityMatrix::from_matrix(Spin(1), bloch_state(Vec3(0, 0, 1))),
                              ds.dirs(), PriorWeights::uniform(3));
  EXPECT_NEAR(qubit_region_inequalities(up, ds)[2], 0.0, 1e-15);

  Rng rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0 / 3);
  for (double triple : {1.0, 0.44, 0.02}) {
    const DirectionSet tri = qubit_triad_with_triple(triple);
    const Su2Scheme sch(tri);
    for (int t = 0; t < 10000; ++t) {
      const auto p = qubit_point(u(rng), u(rng), u(rng));
      const auto v = is_quantum(p, sch);
      if (std::abs(v.min_eigenvalue) < 1e-9) continue;
      const auto r = qubit_region_inequalities(p, tri);
      const bool all = r[0] >= 0 && r[1] >= 0 && r[2] >= 0;
      EXPECT_EQ(all, v.is_quantum);
    }
  }
}

TEST(SampleRegion, QubitCubeIsTheBall) {
  const Su2Scheme sch(orthogonal_triad());
  const auto pts = sample_region(sch, SliceSpec::qubit_cube(), 21);
  ASSERT_EQ(pts.size(), 21u * 21 * 21);
  // Row-major with the last axis fastest.
  EXPECT_DOUBLE_EQ(pts[1].coords[2], 1.0 / 60);
  EXPECT_DOUBLE_EQ(pts[21].coords[1], 1.0 / 60);
  int mismatched = 0;
  for (const auto& pt : pts) {
    const auto p = qubit_point(pt.coords[0], pt.coords[1], pt.coords[2]);
    const double r2 = qubit_ball_radius2(p, sch.directions());
    if (std::abs(r2 - kQubitBallRadius2) < 1e-8) continue;
    mismatched += (r2 <= kQubitBallRadius2) != pt.is_quantum;
  }
  EXPECT_EQ(mismatched, 0);
}

TEST(SampleRegion, VolumeScalesWithTripleProduct) {
  // The image of the Bloch ball under r -> (n_k . r) / 6 has volume
  // proportional to |n_1 . (n_2 x n_3)|.
  // Each grid point stands for a cell of side h; the cube has side 1/3.
  auto fraction = [](double triple) {
    const Su2Scheme sch(qubit_triad_with_triple(triple));
    const auto pts = sample_region(sch, SliceSpec::qubit_cube(), 61);
    int in = 0;
    for (const auto& p : pts) in += p.is_quantum;
    return double(in) / (60.0 * 60.0 * 60.0);
  };
  const double full = fraction(1.0);
  EXPECT_NEAR(full, kPi / 6, 0.01);
  EXPECT_NEAR(fraction(0.44) / full, 0.44, 0.03);
  EXPECT_LT(fraction(0.02), fraction(0.44));
}

TEST(SampleRegion, QutritCutContainsMixedStateAndIsConvex) {
  const double c = 1.0 / 15;
  const Su2Scheme sch(qutrit_cut_directions());
  const SliceSpec slice = SliceSpec::qutrit_cut(c);
  const ProbVector mixed = slice_point(Spin(2), 5, slice, {c, c, c});
  for (double v : mixed.values()) EXPECT_NEAR(v, 1.0 / 15, 1e-15);
  EXPECT_TRUE(is_quantum(mixed, sch).is_quantum);

  const auto pts = sample_region(sch, slice, 15);
  std::vector<std::vector<double>> inside;
  for (const auto& p : pts) {
    if (p.is_quantum) inside.push_back(p.coords);
  }
  ASSERT_GT(inside.size(), 10u);
  Rng rng(6);
  std::uniform_int_distribution<size_t> pick(0, inside.size() - 1);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const auto& a = inside[pick(rng)];
    const auto& b = inside[pick(rng)];
    const double l = lam(rng);
    std::vector<double> mid(3);
    for (int i = 0; i < 3; ++i) mid[i] = l * a[i] + (1 - l) * b[i];
    EXPECT_TRUE(is_quantum(slice_point(Spin(2), 5, slice, mid), sch, 1e-10).is_quantum);
  }
}

TEST(SliceSpecTest, Validation) {
  SliceSpec none;
  EXPECT_THROW(none.validate(Spin(1), 3), ConfigError);
  SliceSpec four = SliceSpec::qubit_cube();
  four.axes.push_back({0, -1, 0.0, 0.1});
  EXPECT_THROW(four.validate(Spin(1), 3), ConfigError);
  SliceSpec dup = SliceSpec::qubit_cube();
  dup.fixed.push_back({0, 1, 0.1});
  EXPECT_THROW(dup.validate(Spin(1), 3), ConfigError);
  SliceSpec empty = SliceSpec::qubit_cube();
  empty.axes[0].hi = empty.axes[0].lo;
  EXPECT_THROW(empty.validate(Spin(1), 3), ConfigError);
  EXPECT_THROW(SliceSpec::qubit_cube().validate(Spin(2), 5), ConfigError);
  EXPECT_NO_THROW(SliceSpec::qutrit_cut(0.05).validate(Spin(2), 5));
  EXPECT_THROW(sample_region(Su2Scheme(orthogonal_triad()), SliceSpec::qubit_cube(), 1),
               ConfigError);
}

TEST(RegionCsv, HeaderAndRows) {
  std::vector<RegionPoint> pts{{{0.1, 0.2}, true, 0.25}, {{0.3, 0.4}, false, -0.5}};
  std::ostringstream out;
  write_region_csv(out, pts);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "coord1,coord2,is_quantum,min_eig");
  std::getline(in, line);
  EXPECT_EQ(std::stod(line.substr(0, line.find(','))), 0.1);
  EXPECT_NE(line.find(",1,"), std::string::npos);
  std::getline(in, line);
  EXPECT_NE(line.find(",0,"), std::string::npos);
}
