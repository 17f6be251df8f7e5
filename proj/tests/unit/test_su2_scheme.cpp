#include <gtest/gtest.h>

#include "spinportrait/errors.hpp"
#include "spinportrait/portrait.hpp"
#include "spinportrait/state_region.hpp"
#include "spinportrait/su2_scheme.hpp"
#include "support.hpp"

using namespace spinportrait;
using namespace sp_test;

namespace {

DirectionSet coplanar_triad() {
  return DirectionSet(Spin(1), {Direction(kPi / 2, 0.0), Direction(kPi / 2, 1.0),
                                Direction(kPi / 2, 2.5)});
}

ProbVector p_eq_of(const DensityMatrix& rho, const DirectionSet& ds) {
  return prob_vector(rho, ds.dirs(), PriorWeights::uniform(ds.size()));
}

}  // namespace

TEST(DirectionSetTest, CountAndShells) {
  EXPECT_THROW(DirectionSet(Spin(1), {Direction::plus_z()}), DomainError);
  const DirectionSet ds = orthogonal_triad();
  EXPECT_EQ(ds.shell(0).size(), 1u);
  EXPECT_EQ(ds.shell(1).size(), 3u);
  EXPECT_EQ(DirectionSet::first_shell(0), 0);
  EXPECT_EQ(DirectionSet::first_shell(1), 1);
  EXPECT_EQ(DirectionSet::first_shell(2), 1);
  EXPECT_EQ(DirectionSet::first_shell(3), 2);
}

TEST(QMatrix, MixedColumnAndRank) {
  const DirectionSet ds = orthogonal_triad();
  const ComplexMatrix q = q_matrix(ds, PriorWeights::uniform(3));
  ASSERT_EQ(q.rows(), 6);
  ASSERT_EQ(q.cols(), 4);
  const ComplexVector col = q * vec(ComplexMatrix::Identity(2, 2) / 2.0);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(col(i) - 1.0 / 6.0), 0.0, 1e-15);
  EXPECT_EQ(numerical_rank(q), 4);
  EXPECT_LT(numerical_rank(q_matrix(coplanar_triad(), PriorWeights::uniform(3))), 4);
}

TEST(QMatrix, ReproducesProbVector) {
  Rng rng(1);
  const Spin s(3);
  const DirectionSet ds = random_feasible_set(s, rng);
  const auto rho = random_density_matrix(s, rng);
  const auto p = p_eq_of(rho, ds);
  const ComplexVector qv = q_matrix(ds, PriorWeights::uniform(ds.size())) * vec(rho.matrix());
  for (int i = 0; i < p.size(); ++i) {
    EXPECT_NEAR(qv(i).real(), p.values()[i], 1e-14);
    EXPECT_NEAR(qv(i).imag(), 0.0, 1e-14);
  }
}

TEST(QMatrix, MinimalityOfDirectionCount) {
  Rng rng(2);
  for (int tj = 1; tj <= 6; ++tj) {
    const Spin s(tj);
    const int d2 = s.dim() * s.dim();
    const DirectionSet ds = random_feasible_set(s, rng, 1e-30);
    EXPECT_EQ(numerical_rank(q_matrix(ds, PriorWeights::uniform(ds.size()))), d2);
    const std::span<const Direction> fewer(ds.dirs().data(), ds.size() - 1);
    EXPECT_LT(numerical_rank(q_matrix(s, fewer, PriorWeights::uniform(ds.size() - 1))), d2);
  }
}

TEST(Gram, OrthogonalTriadAndTripleProduct) {
  EXPECT_LT((gram(1, orthogonal_triad()) - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(),
            1e-15);
  EXPECT_NEAR(feasibility(orthogonal_triad()), 1.0, 1e-15);
  EXPECT_NEAR(feasibility(coplanar_triad()), 0.0, 1e-12);

  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<Direction> d{random_direction(rng), random_direction(rng),
                             random_direction(rng)};
    const Vec3 a = d[0].cartesian(), b = d[1].cartesian(), c = d[2].cartesian();
    const DirectionSet ds(Spin(1), d);
    const RealMatrix g = gram(1, ds);
    EXPECT_NEAR(g(0, 1), a.dot(b), 1e-14);
    const double triple = a.dot(b.cross(c));
    EXPECT_NEAR(g.determinant(), triple * triple, 1e-13);
  }
}

TEST(Gram, DegreeTwoEntries) {
  Rng rng(4);
  const DirectionSet ds = random_feasible_set(Spin(2), rng);
  const RealMatrix g = gram(2, ds);
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      const double x = ds[i].cartesian().dot(ds[k].cartesian());
      EXPECT_NEAR(g(i, k), (3 * x * x - 1) / 2, 1e-14);
    }
  }
  EXPECT_THROW(gram(3, ds), DomainError);
}

TEST(Feasibility, QutritCutDirectionsAreFeasible) {
  const DirectionSet ds = qutrit_cut_directions();
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {2, 0}, {0, 3},
                                               {1, 3}, {0, 4}, {2, 4}};
  for (auto [a, b] : pairs) {
    EXPECT_NEAR(ds[a].cartesian().dot(ds[b].cartesian()), 1.0 / std::sqrt(3.0), 1e-12);
  }
  EXPECT_GT(feasibility(ds), 1e-3);
  EXPECT_GT(std::abs(legendre_determinant_product(ds)), 1e-8);
}

TEST(Feasibility, GramAndLegendreFormsAreProportional) {
  // Both are products over the same shells; det M(q) is a q-dependent
  // constant times det(Delta_q)^2, so their ratio cannot depend on the set.
  Rng rng(5);
  for (int tj : {1, 2, 3}) {
    const Spin s(tj);
    double ratio0 = 0.0;
    for (int t = 0; t < 8; ++t) {
      const DirectionSet ds = random_feasible_set(s, rng, 1e-8);
      const double lp = legendre_determinant_product(ds);
      const double ratio = feasibility(ds) / (lp * lp);
      if (t == 0) {
        ratio0 = ratio;
      } else {
        EXPECT_NEAR(ratio / ratio0, 1.0, 1e-8) << "2j=" << tj;
      }
    }
  }
}

TEST(Feasibility, DegenerateSetsVanishInBothForms) {
  // Repeating a direction inside a shell collapses that shell.
  Rng rng(6);
  for (int tj : {1, 2, 3}) {
    const Spin s(tj);
    std::vector<Direction> d = random_feasible_set(s, rng).dirs();
    d[2] = d[1];
    const DirectionSet ds(s, d);
    EXPECT_NEAR(feasibility(ds), 0.0, 1e-12);
    EXPECT_NEAR(legendre_determinant_product(ds), 0.0, 1e-10);
  }
  EXPECT_NEAR(legendre_determinant_product(coplanar_triad()), 0.0, 1e-12);
}

TEST(Su2SchemeTest, InfeasibleSetNamesTheShell) {
  try {
    Su2Scheme sch(coplanar_triad());
    FAIL() << "expected FeasibilityError";
  } catch (const FeasibilityError& e) {
    EXPECT_EQ(e.shell(), 1);
  }
}

TEST(Su2SchemeTest, ScalarShellQuantizer) {
  Rng rng(7);
  for (int tj : {1, 2, 3}) {
    const Spin s(tj);
    const Su2Scheme sch(random_feasible_set(s, rng));
    const double scale = double(s.direction_count()) / s.dim();
    for (int two_m : s.projections()) {
      EXPECT_LT(max_abs_diff(sch.l_quantizer(0, 0, two_m).mat,
                             scale * ComplexMatrix::Identity(s.dim(), s.dim())),
                1e-12);
    }
  }
}

TEST(Su2SchemeTest, OrthogonalTriadDipoleQuantizer) {
  const Su2Scheme sch(orthogonal_triad());
  for (int k = 0; k < 3; ++k) {
    for (int two_m : {1, -1}) {
      const double m = 0.5 * two_m;
      const ComplexMatrix expect =
          3.0 * std::sqrt(2.0) * m * s_operator(Spin(1), 1, sch.directions()[k]).mat;
      EXPECT_LT(max_abs_diff(sch.l_quantizer(1, k, two_m).mat, expect), 1e-14);
    }
  }
  EXPECT_THROW(sch.l_quantizer(2, 0, 1), DomainError);
}

TEST(Su2SchemeTest, ShellMembershipOfQuantizers) {
  Rng rng(8);
  const Su2Scheme sch(random_feasible_set(Spin(1), rng));
  for (int two_m : {1, -1}) {
    EXPECT_LT(max_abs_diff(sch.quantizer(0, two_m).mat,
                           sch.l_quantizer(0, 0, two_m).mat + sch.l_quantizer(1, 0, two_m).mat),
              1e-14);
    for (int k : {1, 2}) {
      EXPECT_LT(max_abs_diff(sch.quantizer(k, two_m).mat, sch.l_quantizer(1, k, two_m).mat),
                1e-14);
      EXPECT_THROW(sch.l_quantizer(0, k, two_m), DomainError);
    }
    EXPECT_NEAR(sch.quantizer(0, two_m).mat.trace().real(), 3.0, 1e-13);
  }
}

TEST(Su2SchemeTest, Biorthogonality) {
  Rng rng(9);
  for (int tj : {1, 2, 3, 4}) {
    const Spin s(tj);
    const Su2Scheme sch(random_feasible_set(s, rng));
    const CoeffTable& f = sch.coefficients();
    double worst = 0.0;
    for (int L = 0; L <= tj; ++L) {
      for (int Lp = 0; Lp <= tj; ++Lp) {
        for (int k = 0; k < 2 * L + 1; ++k) {
          for (int kp = 0; kp < 2 * Lp + 1; ++kp) {
            for (int im = 0; im < s.dim(); ++im) {
              for (int imp = 0; imp < s.dim(); ++imp) {
                const int m = s.two_m_at(im), mp = s.two_m_at(imp);
                const Complex tr = (sch.l_dequantizer(L, k, m).mat *
                                    sch.l_quantizer(Lp, kp, mp).mat).trace();
                const double expect =
                    (L == Lp && k == kp) ? f(L, im) * f(L, imp) : 0.0;
                worst = std::max(worst, std::abs(tr - expect));
              }
            }
          }
        }
      }
    }
    EXPECT_LT(worst, 1e-10) << "2j=" << tj;
  }
}

TEST(Su2SchemeTest, ReconstructExamples) {
  const Su2Scheme sch(orthogonal_triad());
  const auto up = DensityMatrix::from_matrix(Spin(1), bloch_state(Vec3(0, 0, 1)));
  EXPECT_LT(max_abs_diff(sch.reconstruct(p_eq_of(up, orthogonal_triad())).matrix(),
                         up.matrix()),
            1e-12);
  for (int tj : {1, 2, 3}) {
    Rng rng(10 + tj);
    const Spin s(tj);
    const Su2Scheme any(random_feasible_set(s, rng));
    std::vector<double> flat(size_t(s.dim() * any.n_rotations()),
                             1.0 / (s.dim() * any.n_rotations()));
    const auto back = any.reconstruct(ProbVector(s, any.n_rotations(), flat));
    EXPECT_LT(max_abs_diff(back.matrix(),
                           DensityMatrix::maximally_mixed(s).matrix()),
              1e-12);
  }
}

TEST(Su2SchemeTest, RoundTripOnRandomFeasibleSets) {
  Rng rng(11);
  for (int tj = 1; tj <= 6; ++tj) {
    const Spin s(tj);
    const DirectionSet ds = random_feasible_set(s, rng, 1e-6);
    const Su2Scheme sch(ds);
    for (int t = 0; t < 4; ++t) {
      const auto rho = random_density_matrix(s, rng);
      EXPECT_LT(max_abs_diff(sch.reconstruct(p_eq_of(rho, ds)).matrix(), rho.matrix()),
                1e-9)
          << "2j=" << tj;
    }
  }
}

TEST(Su2SchemeTest, LinearInverseOfArbitraryOperators) {
  Rng rng(12);
  const Spin s(3);
  const Su2Scheme sch(random_feasible_set(s, rng));
  const ComplexMatrix a = random_hermitian(4, rng);
  const ComplexVector sym =
      q_matrix(sch.directions(), PriorWeights::uniform(7)) * vec(a);
  std::vector<double> vals(size_t(sym.size()));
  for (int i = 0; i < sym.size(); ++i) vals[i] = sym(i).real();
  EXPECT_LT(max_abs_diff(sch.reconstruct_operator(ProbVector::unchecked(s, 7, vals)), a),
            1e-11);
}

TEST(Su2SchemeTest, RejectsMismatchedOrUnequalInput) {
  const Su2Scheme sch(orthogonal_triad());
  EXPECT_THROW(sch.reconstruct(ProbVector(Spin(2), 3, std::vector<double>(9, 1.0 / 9))),
               DomainError);
  EXPECT_THROW(sch.reconstruct(ProbVector(Spin(1), 3, {0.5, 0.1, 0.1, 0.1, 0.1, 0.1})),
               DomainError);
  // Equal blocks but outside the region: not a state.
  EXPECT_THROW(sch.reconstruct(ProbVector(Spin(1), 3, {1.0 / 3, 0, 1.0 / 3, 0, 1.0 / 3, 0})),
               InvariantError);
}

TEST(QubitClosedForm, MatchesGeneralInverse) {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const DirectionSet ds = random_feasible_set(Spin(1), rng, 1e-3);
    const auto rho = random_density_matrix(Spin(1), rng);
    const auto p = p_eq_of(rho, ds);
    EXPECT_LT(max_abs_diff(qubit_closed_form(p, ds), rho.matrix()), 1e-11);
    EXPECT_LT(max_abs_diff(qubit_closed_form(p, ds),
                           Su2Scheme(ds).reconstruct_operator(p)),
              1e-11);
  }
}

TEST(DualVectors, DualBasisIdentity) {
  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    const DirectionSet ds = random_feasible_set(Spin(1), rng, 1e-3);
    const auto l = dual_vectors(ds.dirs());
    for (int k = 0; k < 3; ++k) {
      for (int kp = 0; kp < 3; ++kp) {
        EXPECT_NEAR(l[k].dot(ds[kp].cartesian()), k == kp ? 1.0 : 0.0, 1e-12);
      }
    }
  }
  EXPECT_THROW(dual_vectors(coplanar_triad().dirs()), FeasibilityError);
}

TEST(NoiseAmplification, GrowsWithConditionNumber) {
  // Triads with shrinking triple product: cond(Q) rises and so does the
  // mean reconstruction error under the same injected noise.
  const auto rho = DensityMatrix::from_matrix(Spin(1), bloch_state(Vec3(0.3, -0.2, 0.4)));
  double prev_cond = 0.0;
  double prev_err = 0.0;
  for (double triple : {1.0, 0.44, 0.1, 0.02}) {
    const DirectionSet ds = qubit_triad_with_triple(triple);
    const Su2Scheme sch(ds);
    const auto p = p_eq_of(rho, ds);
    Rng rng(15);
    std::normal_distribution<double> noise(0.0, 1e-4);
    double err = 0.0;
    for (int t = 0; t < 400; ++t) {
      std::vector<double> v = p.values();
      for (double& x : v) x += noise(rng);
      err += (sch.reconstruct_operator(ProbVector::unchecked(Spin(1), 3, v)) -
              rho.matrix()).norm();
    }
    err /= 400;
    const double cond = q_condition(ds);
    EXPECT_GT(cond, prev_cond);
    EXPECT_GT(err, prev_err);
    prev_cond = cond;
    prev_err = err;
  }
}
