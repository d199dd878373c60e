#include <cmath>

#include <gtest/gtest.h>

#include "uncert/operators.hpp"

using namespace uncert;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

void expect_matrix_near(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  EXPECT_LE(max_abs(a - b), tol);
}

ComplexMatrix comm(const HermitianOperator& a, const HermitianOperator& b) {
  return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

}  // namespace

TEST(SpinOperators, SpinHalfIsPauliOverTwo) {
  const SpinTriple s = spin_operators(0.5);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  expect_matrix_near(s.jx.matrix(), sx / 2.0, 1e-15);
  expect_matrix_near(s.jy.matrix(), sy / 2.0, 1e-15);
  expect_matrix_near(s.jz.matrix(), sz / 2.0, 1e-15);
}

TEST(SpinOperators, SpinOneExplicit) {
  const SpinTriple s = spin_operators(1.0);
  ComplexMatrix jz = ComplexMatrix::Zero(3, 3);
  jz(0, 0) = 1;
  jz(2, 2) = -1;
  ComplexMatrix jy(3, 3);
  const Complex i(0, 1);
  jy << 0, -i, 0, i, 0, -i, 0, i, 0;
  expect_matrix_near(s.jz.matrix(), jz, 0.0);
  expect_matrix_near(s.jy.matrix(), kS * jy, 1e-15);

  const Eigensystem es = hermitian_eigensystem(s.jy);
  EXPECT_NEAR(es.values[0], -1.0, 1e-14);
  EXPECT_NEAR(es.values[1], 0.0, 1e-14);
  EXPECT_NEAR(es.values[2], 1.0, 1e-14);
}

TEST(SpinOperators, CommutationRelations) {
  for (double j : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    for (double hbar : {1.0, 0.7}) {
      const SpinTriple s = spin_operators(j, hbar);
      const Complex ih = kI * hbar;
      expect_matrix_near(comm(s.jx, s.jy), ih * s.jz.matrix(), 1e-12);
      expect_matrix_near(comm(s.jy, s.jz), ih * s.jx.matrix(), 1e-12);
      expect_matrix_near(comm(s.jz, s.jx), ih * s.jy.matrix(), 1e-12);
      const auto n = static_cast<Eigen::Index>(std::lround(2 * j)) + 1;
      ASSERT_EQ(s.jz.dim(), n);
      for (Eigen::Index k = 0; k < n; ++k) {
        EXPECT_DOUBLE_EQ(s.jz.matrix()(k, k).real(), hbar * (j - static_cast<double>(k)));
      }
    }
  }
}

TEST(SpinOperators, RejectsInvalidJ) {
  EXPECT_THROW(spin_operators(0.3), ValidationError);
  EXPECT_THROW(spin_operators(0.0), ValidationError);
  EXPECT_THROW(spin_operators(-1.0), ValidationError);
  EXPECT_THROW(spin_operators(1.0, 0.0), ValidationError);
}

TEST(LadderOperators, SmallTruncations) {
  const FockAlgebra two = ladder_operators(2);
  ComplexMatrix a2(2, 2);
  a2 << 0, 1, 0, 0;
  expect_matrix_near(two.a, a2, 0.0);

  const FockAlgebra four = ladder_operators(4);
  for (Eigen::Index n = 1; n < 4; ++n) {
    EXPECT_DOUBLE_EQ(four.a(n - 1, n).real(), std::sqrt(static_cast<double>(n)));
  }
  EXPECT_EQ(four.a.cwiseAbs().sum(), 1.0 + std::sqrt(2.0) + std::sqrt(3.0));
  EXPECT_THROW(ladder_operators(1), ValidationError);
}

TEST(LadderOperators, TruncationCornerDefect) {
  const FockAlgebra alg = ladder_operators(20);
  const ComplexMatrix c = alg.a * alg.a_dagger - alg.a_dagger * alg.a;
  ComplexMatrix expected = ComplexMatrix::Identity(20, 20);
  expected(19, 19) = -19.0;
  expect_matrix_near(c, expected, 1e-12);
  // a|n> = sqrt(n)|n-1>
  for (Eigen::Index n = 1; n < 20; ++n) {
    const ComplexVector out = alg.a * fock_state(20, n).amplitudes();
    EXPECT_NEAR(std::abs(out[n - 1] - std::sqrt(static_cast<double>(n))), 0.0, 1e-14);
    EXPECT_NEAR(out.norm(), std::sqrt(static_cast<double>(n)), 1e-14);
  }
}

TEST(Quadratures, VacuumValues) {
  const QuadraturePair q = quadratures(ladder_operators(20));
  const StateVector vac = fock_state(20, 0);
  EXPECT_EQ(expectation(vac, q.x1), 0.0);
  EXPECT_NEAR(variance(vac, q.x1), 0.25, 1e-15);
  EXPECT_NEAR(variance(vac, q.x2), 0.25, 1e-15);
  EXPECT_NEAR(commutator_mean(vac, q.x1, q.x2), -0.5, 1e-15);
  EXPECT_TRUE(is_hermitian(q.x1.matrix(), 1e-14));
  EXPECT_TRUE(is_hermitian(q.x2.matrix(), 1e-14));
}

TEST(Quadratures, SquareSumMatchesNumberOperatorOffCorner) {
  const FockAlgebra alg = ladder_operators(30);
  const QuadraturePair q = quadratures(alg);
  const ComplexMatrix lhs = 4.0 * (q.x1.matrix() * q.x1.matrix() + q.x2.matrix() * q.x2.matrix());
  const ComplexMatrix rhs = 2.0 * (alg.a_dagger * alg.a + alg.a * alg.a_dagger);
  expect_matrix_near(lhs.topLeftCorner(29, 29), rhs.topLeftCorner(29, 29), 1e-12);
}

TEST(PositionMomentum, VacuumAndFockVariances) {
  for (double hbar : {1.0, 2.0}) {
    const FockAlgebra alg = ladder_operators(20, hbar);
    const PositionMomentum xp = position_momentum(alg);
    const StateVector vac = fock_state(20, 0);
    EXPECT_NEAR(variance(vac, xp.x), hbar / 2, 1e-14);
    EXPECT_NEAR(variance(vac, xp.x) + variance(vac, xp.p), hbar, 1e-14);
    EXPECT_NEAR(commutator_mean(vac, xp.x, xp.p), -hbar, 1e-14);
  }
  const PositionMomentum xp = position_momentum(ladder_operators(20, 1.0));
  const StateVector one = fock_state(20, 1);
  EXPECT_NEAR(variance(one, xp.x) + variance(one, xp.p), 3.0, 1e-14);
}

TEST(PositionMomentum, ScaledQuadratures) {
  for (double hbar : {0.5, 1.0, 3.0}) {
    const FockAlgebra alg = ladder_operators(12, hbar);
    const QuadraturePair q = quadratures(alg);
    const PositionMomentum xp = position_momentum(alg);
    const double s = std::sqrt(2.0 * hbar);
    expect_matrix_near(xp.x.matrix(), s * q.x1.matrix(), 1e-14);
    expect_matrix_near(xp.p.matrix(), s * q.x2.matrix(), 1e-14);
  }
}

TEST(FockStates, SqueezedVacuumVariances) {
  const QuadraturePair q = quadratures(ladder_operators(kDefaultFockDim));
  for (double r : {0.0, 0.25, 0.5}) {
    const StateVector sq = squeezed_vacuum(kDefaultFockDim, r);
    EXPECT_NEAR(variance(sq, q.x1), std::exp(-2 * r) / 4, 1e-9);
    EXPECT_NEAR(variance(sq, q.x2), std::exp(2 * r) / 4, 1e-9);
  }
}

TEST(FockStates, CoherentStateIsDisplacedVacuum) {
  const QuadraturePair q = quadratures(ladder_operators(kDefaultFockDim));
  const Complex alpha(1.0, 0.5);
  const StateVector c = coherent_state(kDefaultFockDim, alpha);
  EXPECT_NEAR(expectation(c, q.x1), alpha.real(), 1e-12);
  EXPECT_NEAR(expectation(c, q.x2), alpha.imag(), 1e-12);
  EXPECT_NEAR(variance(c, q.x1), 0.25, 1e-12);
  EXPECT_NEAR(variance(c, q.x2), 0.25, 1e-12);
}

TEST(FockStates, LowOccupancyContract) {
  EXPECT_LT(top_level_weight(squeezed_vacuum(kDefaultFockDim, 0.5)), kLowOccupancyWeight);
  EXPECT_THROW(squeezed_vacuum(10, 1.5), ValidationError);
  EXPECT_THROW(coherent_state(8, Complex(3.0, 0.0)), ValidationError);
  EXPECT_THROW(check_low_occupancy(fock_state(20, 19)), ValidationError);
  EXPECT_THROW(fock_state(4, 4), ValidationError);
}
