#include <cmath>

#include <gtest/gtest.h>

#include "uncert/hilbert.hpp"
#include "uncert/operators.hpp"
#include "uncert/random_states.hpp"

using namespace uncert;

namespace {

ComplexVector vec(std::initializer_list<Complex> xs) {
  ComplexVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Complex x : xs) v[i++] = x;
  return v;
}

HermitianOperator diag(std::initializer_list<double> xs) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(xs.size()),
                                        static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) m(i, i) = x, ++i;
  return HermitianOperator(m);
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(Expectation, Examples) {
  const SpinTriple s = spin_operators(1.0);
  EXPECT_DOUBLE_EQ(expectation(normalize(vec({1, 0, 0})), diag({1, 0, -1})), 1.0);
  const StateVector psi = normalize(vec({1, 1, 0}));
  EXPECT_NEAR(expectation(psi, s.jz), 0.5, 1e-15);
  EXPECT_NEAR(expectation(psi, s.jx), kInvSqrt2, 1e-15);
}

TEST(Expectation, DimensionMismatchThrows) {
  EXPECT_THROW(expectation(normalize(vec({1, 0})), diag({1, 0, -1})), ValidationError);
}

TEST(HermitianOperator, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(HermitianOperator{m}, ValidationError);
  m << 1, Complex(0, 1), Complex(0, 1), 1;
  EXPECT_THROW(HermitianOperator{m}, ValidationError);
  m << 1, Complex(0, 1), Complex(0, -1), 1;
  EXPECT_NO_THROW(HermitianOperator{m});
}

TEST(Variance, Examples) {
  const SpinTriple s = spin_operators(1.0);
  EXPECT_EQ(variance(normalize(vec({1, 0, 0})), diag({1, 0, -1})), 0.0);
  EXPECT_NEAR(variance(normalize(vec({1, 1, 0})), s.jz), 0.25, 1e-15);

  const QuadraturePair q = quadratures(ladder_operators(20));
  EXPECT_NEAR(variance(fock_state(20, 0), q.x1), 0.25, 1e-15);
}

TEST(CommutatorMean, Examples) {
  const SpinTriple s = spin_operators(1.0);
  const StateVector psi = normalize(vec({1, 1, 0}));
  EXPECT_EQ(commutator_mean(psi, s.jx, s.jx), 0.0);
  // [Jz, Jy] = -i Jx, so i<[Jz,Jy]> = <Jx> = +1/sqrt(2)
  EXPECT_NEAR(commutator_mean(psi, s.jz, s.jy), kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(commutator_mean(psi, s.jz, s.jy)), kInvSqrt2, 1e-15);

  const QuadraturePair q = quadratures(ladder_operators(20));
  EXPECT_NEAR(commutator_mean(fock_state(20, 0), q.x1, q.x2), -0.5, 1e-15);
}

TEST(CommutatorMean, MatchesDenseCommutator) {
  RandomSource rng(11);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 2 + t % 6;
    const StateVector psi = random_state(n, rng);
    const HermitianOperator a = random_hermitian(n, rng);
    const HermitianOperator b = random_hermitian(n, rng);
    const ComplexMatrix comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    const Complex dense = kI * psi.amplitudes().dot(comm * psi.amplitudes());
    EXPECT_LT(std::abs(dense.imag()), 1e-10);
    EXPECT_NEAR(commutator_mean(psi, a, b), dense.real(), 1e-12);
  }
}

TEST(Inner, Examples) {
  const ComplexVector e1 = vec({1, 0}), e2 = vec({0, 1});
  EXPECT_EQ(inner(e1, e1), Complex(1, 0));
  EXPECT_EQ(inner(e1, e2), Complex(0, 0));
  const StateVector u = normalize(vec({1, Complex(0, 1)}));
  const StateVector v = normalize(vec({1, Complex(0, -1)}));
  EXPECT_LT(std::abs(inner(u, v)), 1e-16);
  // conjugate-linear in the first slot
  EXPECT_NEAR(std::abs(inner(Complex(0, 1) * e1, e1) - Complex(0, -1)), 0.0, 1e-16);
  EXPECT_THROW(inner(e1, vec({1, 0, 0})), ValidationError);
}

TEST(Normalize, Examples) {
  const StateVector a = normalize(vec({2, 0, 0}));
  EXPECT_EQ(a.amplitudes(), vec({1, 0, 0}));
  const StateVector b = normalize(vec({1, 1, 0}));
  EXPECT_NEAR((b.amplitudes() - vec({kInvSqrt2, kInvSqrt2, 0})).norm(), 0.0, 1e-16);
  EXPECT_NEAR(b.amplitudes().norm(), 1.0, 1e-15);
  try {
    normalize(vec({0, 0, 0}));
    FAIL() << "expected null vector error";
  } catch (const NullVectorError& e) {
    EXPECT_STREQ(e.what(), "null vector");
  }
}

TEST(Normalize, RejectsOneDimensional) {
  EXPECT_THROW(normalize(vec({1})), ValidationError);
}

TEST(StateVector, FromNormalizedChecksNorm) {
  EXPECT_NO_THROW(StateVector::from_normalized(vec({1, 0})));
  EXPECT_THROW(StateVector::from_normalized(vec({1, 1})), ValidationError);
}

TEST(ProjectOut, Examples) {
  const StateVector e1 = normalize(vec({1, 0}));
  EXPECT_EQ(project_out(e1, vec({1, 0})).norm(), 0.0);
  EXPECT_EQ(project_out(e1, vec({0, 1})), vec({0, 1}));
  const StateVector plus = normalize(vec({1, 1}));
  EXPECT_NEAR((project_out(plus, vec({1, 0})) - vec({0.5, -0.5})).norm(), 0.0, 1e-16);
}

TEST(HermitianEigensystem, Examples) {
  const Eigensystem d = hermitian_eigensystem(diag({3, 1, 2}));
  EXPECT_NEAR(d.values[0], 1.0, 1e-14);
  EXPECT_NEAR(d.values[1], 2.0, 1e-14);
  EXPECT_NEAR(d.values[2], 3.0, 1e-14);

  const Eigensystem jy = hermitian_eigensystem(spin_operators(1.0).jy);
  EXPECT_NEAR(jy.values[0], -1.0, 1e-14);
  EXPECT_NEAR(jy.values[1], 0.0, 1e-14);
  EXPECT_NEAR(jy.values[2], 1.0, 1e-14);

  const Eigensystem x1 = hermitian_eigensystem(quadratures(ladder_operators(2)).x1);
  EXPECT_NEAR(x1.values[0], -0.5, 1e-15);
  EXPECT_NEAR(x1.values[1], 0.5, 1e-15);
}

// ---- properties over random inputs ----

TEST(HilbertProperties, VarianceTwoFormulasAgree) {
  RandomSource rng(1);
  for (int t = 0; t < 2000; ++t) {
    const Eigen::Index n = 2 + t % 7;
    const StateVector psi = random_state(n, rng);
    const HermitianOperator m = random_hermitian(n, rng);
    const double v = variance(psi, m);
    const ComplexVector centered =
        m.matrix() * psi.amplitudes() - expectation(psi, m) * psi.amplitudes();
    EXPECT_GE(v, 0.0);
    EXPECT_NEAR(v, centered.squaredNorm(), 1e-10);
  }
}

TEST(HilbertProperties, CommutatorAntisymmetry) {
  RandomSource rng(2);
  for (int t = 0; t < 2000; ++t) {
    const Eigen::Index n = 2 + t % 7;
    const StateVector psi = random_state(n, rng);
    const HermitianOperator a = random_hermitian(n, rng);
    const HermitianOperator b = random_hermitian(n, rng);
    EXPECT_NEAR(commutator_mean(psi, a, b), -commutator_mean(psi, b, a), 1e-12);
  }
}

TEST(HilbertProperties, CauchySchwarz) {
  RandomSource rng(3);
  for (int t = 0; t < 5000; ++t) {
    const Eigen::Index n = 2 + t % 7;
    ComplexVector f(n), g(n);
    for (Eigen::Index i = 0; i < n; ++i) f[i] = rng.complex_normal(), g[i] = rng.complex_normal();
    const double slack = inner(f, f).real() * inner(g, g).real() - std::norm(inner(f, g));
    EXPECT_GE(slack, -1e-10);
  }
}

TEST(HilbertProperties, ProjectOutIsOrthogonal) {
  RandomSource rng(4);
  for (int t = 0; t < 10000; ++t) {
    const Eigen::Index n = 2 + t % 7;
    const StateVector psi = random_state(n, rng);
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.complex_normal();
    ASSERT_LT(std::abs(inner(psi.amplitudes(), project_out(psi, v))), 1e-12);
  }
}

TEST(HilbertProperties, EigenReconstructionAndOrthonormality) {
  RandomSource rng(5);
  for (int t = 0; t < 500; ++t) {
    const Eigen::Index n = 2 + t % 9;
    const HermitianOperator m = random_hermitian(n, rng);
    const Eigensystem es = hermitian_eigensystem(m);
    const ComplexMatrix& v = es.basis;
    const ComplexMatrix rebuilt = v * es.values.cast<Complex>().asDiagonal() * v.adjoint();
    EXPECT_LT(max_abs(m.matrix() - rebuilt), 1e-10 * max_abs(m.matrix()));
    EXPECT_LT(max_abs(v.adjoint() * v - ComplexMatrix::Identity(n, n)), 1e-10);
    for (Eigen::Index k = 1; k < n; ++k) EXPECT_LE(es.values[k - 1], es.values[k]);
    ASSERT_EQ(static_cast<Eigen::Index>(es.vectors.size()), n);
  }
}
