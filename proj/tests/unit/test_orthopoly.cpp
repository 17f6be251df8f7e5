#include <gtest/gtest.h>

#include "spinportrait/errors.hpp"
#include "spinportrait/orthopoly.hpp"
#include "support.hpp"

using namespace spinportrait;
using namespace sp_test;

TEST(CoeffTable, PrintedSpinHalfAndSpinOneForms) {
  const CoeffTable h(Spin(1));
  for (int i = 0; i < 2; ++i) {
    const double m = Spin(1).m_at(i);
    EXPECT_NEAR(h(0, i), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(h(1, i), std::sqrt(2.0) * m, 1e-12);
  }
  const CoeffTable one(Spin(2));
  for (int i = 0; i < 3; ++i) {
    const double m = Spin(2).m_at(i);
    EXPECT_NEAR(one(2, i), (3 * m * m - 2) / std::sqrt(6.0), 1e-12);
  }
  EXPECT_NEAR(one.at(2, 0), -2.0 / std::sqrt(6.0), 1e-12);
}

TEST(CoeffTable, FirstDegreeClosedFormForAnySpin) {
  for (int tj = 1; tj <= 14; ++tj) {
    const Spin s(tj);
    const CoeffTable f(s);
    const double j = s.j();
    for (int i = 0; i < s.dim(); ++i) {
      EXPECT_NEAR(f(1, i),
                  std::sqrt(3.0) * s.m_at(i) / std::sqrt(j * (j + 1) * (2 * j + 1)),
                  1e-12);
    }
  }
}

TEST(CoeffTable, MatchesDiscreteChebyshevOverNorm) {
  for (int tj = 0; tj <= 6; ++tj) {
    const Spin s(tj);
    const CoeffTable f(s);
    for (int L = 0; L <= tj; ++L) {
      const long double dl = chebyshev_norm(L, tj);
      for (int i = 0; i < s.dim(); ++i) {
        const int x = (tj + s.two_m_at(i)) / 2;  // j + m
        const double expect = double(chebyshev_t(L, x, s.dim()) / dl);
        EXPECT_NEAR(f(L, i), expect, 1e-11) << "2j=" << tj << " L=" << L;
      }
    }
  }
}

TEST(CoeffTable, OrthonormalParityAndConstantRow) {
  for (int tj = 0; tj <= 12; ++tj) {
    const Spin s(tj);
    const CoeffTable f(s);
    const RealMatrix gram = f.values() * f.values().transpose();
    EXPECT_LT((gram - RealMatrix::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff(),
              1e-11);
    for (int i = 0; i < s.dim(); ++i) {
      EXPECT_NEAR(f(0, i), 1.0 / std::sqrt(double(s.dim())), 1e-15);
    }
    for (int L = 0; L <= tj; ++L) {
      EXPECT_GT(f(L, 0), 0.0);
      const double sign = L % 2 ? -1.0 : 1.0;
      for (int i = 0; i < s.dim(); ++i) {
        EXPECT_NEAR(f(L, s.dim() - 1 - i), sign * f(L, i), 1e-12);
      }
    }
  }
}

TEST(CoeffTable, LargeSpinStaysOrthonormal) {
  const Spin s(25);
  const CoeffTable f(s);
  const RealMatrix gram = f.values() * f.values().transpose();
  EXPECT_LT((gram - RealMatrix::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff(),
            1e-10);
}

TEST(Legendre, MatchesExplicitSum) {
  for (int L = 0; L <= 12; ++L) {
    for (double x : {-1.0, -0.7, -0.1, 0.0, 0.33, 0.9, 1.0}) {
      EXPECT_NEAR(legendre(L, x), legendre_explicit(L, x), 1e-12);
    }
  }
  EXPECT_THROW(legendre(-1, 0.0), DomainError);
}

TEST(SOperator, SpinOneDegreeTwoClosedForm) {
  const Spin s(2);
  const auto j = angular_momentum(s);
  Rng rng(3);
  for (int t = 0; t < 4; ++t) {
    const Direction n = random_direction(rng);
    const ComplexMatrix jn = j.along(n.cartesian());
    const ComplexMatrix expect =
        (3.0 * jn * jn - 2.0 * ComplexMatrix::Identity(3, 3)) / std::sqrt(6.0);
    EXPECT_LT(max_abs_diff(s_operator(s, 2, n).mat, expect), 1e-12);
  }
}

TEST(SOperator, DegreeZeroIsScaledIdentity) {
  Rng rng(4);
  const Spin s(3);
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4) / 2.0;
  EXPECT_LT(max_abs_diff(s_operator(s, 0, random_direction(rng)).mat, id), 1e-12);
  EXPECT_LT(max_abs_diff(s_operator(s, 0, haar_unitary(4, rng)).mat, id), 1e-12);
}

TEST(SOperator, OverlapIsLegendreOfDotProduct) {
  Rng rng(8);
  for (int tj : {1, 2, 3, 4}) {
    const Spin s(tj);
    for (int t = 0; t < 5; ++t) {
      const Direction a = random_direction(rng);
      const Direction b = random_direction(rng);
      const double x = a.cartesian().dot(b.cartesian());
      for (int L = 0; L <= tj; ++L) {
        for (int Lp = 0; Lp <= tj; ++Lp) {
          const Complex tr =
              (s_operator(s, L, a).mat * s_operator(s, Lp, b).mat).trace();
          const double expect = L == Lp ? legendre_explicit(L, x) : 0.0;
          EXPECT_NEAR(tr.real(), expect, 1e-11);
          EXPECT_NEAR(tr.imag(), 0.0, 1e-11);
        }
      }
    }
  }
}

TEST(SOperator, FrameCovarianceAndUnitaryFrames) {
  Rng rng(9);
  const Spin s(4);
  const Direction n = random_direction(rng);
  const UnitaryOp r = rotation(s, n);
  for (int L = 0; L <= 4; ++L) {
    const ComplexMatrix z = s_operator(s, L, Direction::plus_z()).mat;
    EXPECT_LT(max_abs_diff(s_operator(s, L, n).mat, r.mat * z * r.mat.adjoint()),
              1e-12);
  }
  const UnitaryOp u = haar_unitary(5, rng);
  for (int L = 0; L <= 4; ++L) {
    for (int Lp = 0; Lp <= 4; ++Lp) {
      const double tr =
          (s_operator(s, L, u).mat * s_operator(s, Lp, u).mat).trace().real();
      EXPECT_NEAR(tr, L == Lp ? 1.0 : 0.0, 1e-11);
    }
  }
  EXPECT_THROW(s_operator(s, 5, n), DomainError);
  EXPECT_THROW(s_operator(s, -1, n), DomainError);
}

TEST(AssocLegendre, RejectsOrderAboveDegree) {
  EXPECT_THROW(assoc_legendre(2, 3, 0.1), DomainError);
  EXPECT_NEAR(assoc_legendre(1, 1, 0.6), 0.8, 1e-15);
}
