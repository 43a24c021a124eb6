#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pcpt/matrix.hpp"
#include "pcpt/tolerances.hpp"

using namespace pcpt;

namespace {

CMatrix c2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST(Kron, IdentityTimesIdentity) {
    EXPECT_EQ(kron(CMatrix(CMatrix::Identity(2, 2)), CMatrix(CMatrix::Identity(2, 2))), CMatrix(CMatrix::Identity(4, 4)));
}

TEST(Kron, SigmaZWithIdentity) {
    const CMatrix out = kron(oracle::pauli_z(), CMatrix(CMatrix::Identity(2, 2)));
    CMatrix expected = CMatrix::Zero(4, 4);
    expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
    EXPECT_EQ(out, expected);
}

TEST(Kron, SigmaXWithSigmaXIsAntiDiagonal) {
    const CMatrix out = kron(oracle::pauli_x(), oracle::pauli_x());
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) EXPECT_EQ(out(i, j), Complex(i + j == 3 ? 1.0 : 0.0));
}

TEST(Kron, MatchesLoopOracleOnRectangularInputs) {
    std::mt19937_64 rng(1);
    const CMatrix a = oracle::random_complex(2, 3, rng);
    const CMatrix b = oracle::random_complex(4, 1, rng);
    EXPECT_LT(oracle::max_abs(kron(a, b) - oracle::kron(a, b)), 1e-15);
}

TEST(Kron, AssociativeAndMixedProduct) {
    std::mt19937_64 rng(2);
    for (int s = 0; s < 20; ++s) {
        const CMatrix a = oracle::random_complex(2, 3, rng), b = oracle::random_complex(3, 2, rng);
        const CMatrix c = oracle::random_complex(3, 2, rng), d = oracle::random_complex(2, 4, rng);
        EXPECT_LT(oracle::max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))), 1e-12);
        EXPECT_LT(oracle::max_abs(CMatrix(kron(a, b) * kron(c, d)) - kron(CMatrix(a * c), CMatrix(b * d))), 1e-12);
    }
}

TEST(Vectorize, StacksColumns) {
    const CMatrix m = c2(1.0, 3.0, 2.0, 4.0);  // [[a,c],[b,d]] with a..d = 1..4
    CVector expected(4);
    expected << 1.0, 2.0, 3.0, 4.0;
    EXPECT_EQ(vectorize(m), expected);
}

TEST(Vectorize, SigmaTwo) {
    CVector expected(4);
    expected << 0.0, -1.0, 1.0, 0.0;
    EXPECT_EQ(vectorize(c2(0.0, 1.0, -1.0, 0.0)), expected);
}

TEST(Vectorize, IdentityThree) {
    const CVector v = vectorize(CMatrix(CMatrix::Identity(3, 3)));
    for (Index i = 0; i < 9; ++i) EXPECT_EQ(v(i), Complex(i % 4 == 0 ? 1.0 : 0.0));
}

TEST(Vectorize, RealOverloadMatchesComplex) {
    RMatrix r(2, 3);
    r << 1, 2, 3, 4, 5, 6;
    EXPECT_EQ(vectorize(r).cast<Complex>(), vectorize(CMatrix(r.cast<Complex>())));
}

TEST(Vectorize, ProductIdentityOnRandomTriples) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dim(1, 6);
    double worst = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const int m = dim(rng), n = dim(rng), p = dim(rng), q = dim(rng);
        const CMatrix a = oracle::random_complex(m, n, rng), x = oracle::random_complex(n, p, rng),
                      b = oracle::random_complex(p, q, rng);
        const CVector lhs = oracle::vec(a * x * b);
        const CVector rhs = oracle::kron(b.transpose(), a) * oracle::vec(x);
        ASSERT_LT((lhs - rhs).norm(), 1e-12);
        worst = std::max(worst, (vectorize(CMatrix(a * x * b)) - kron(CMatrix(b.transpose()), a) * vectorize(x)).norm());
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(Unvectorize, Examples) {
    CVector y(4);
    y << 1.0, 0.0, 0.0, 1.0;
    EXPECT_EQ(unvectorize(y, 2, 2), CMatrix(CMatrix::Identity(2, 2)));
    y << 0.0, -1.0, 1.0, 0.0;
    EXPECT_EQ(unvectorize(y, 2, 2), c2(0.0, 1.0, -1.0, 0.0));
}

TEST(Unvectorize, RoundTripIsExact) {
    std::mt19937_64 rng(4);
    const CMatrix r = oracle::random_complex(3, 5, rng);
    EXPECT_EQ(unvectorize(vectorize(r), 3, 5), r);
}

TEST(Unvectorize, DimensionMismatchNamesSizes) {
    try {
        unvectorize(CVector::Zero(5), 2, 2);
        FAIL() << "expected std::invalid_argument";
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find('5'), std::string::npos) << msg;
        EXPECT_NE(msg.find('2'), std::string::npos) << msg;
    }
}

TEST(Matexp, ZeroGeneratorGivesIdentity) {
    EXPECT_LT(oracle::max_abs(matexp_unitary(CMatrix::Zero(3, 3), 2.7) - CMatrix::Identity(3, 3)), 1e-15);
}

TEST(Matexp, SigmaZAtPiIsMinusIdentity) {
    EXPECT_LT(oracle::max_abs(matexp_unitary(oracle::pauli_z(), std::numbers::pi) + CMatrix::Identity(2, 2)), 1e-14);
}

TEST(Matexp, SigmaXAtHalfPi) {
    const CMatrix expected = Complex(0.0, -1.0) * oracle::pauli_x();
    EXPECT_LT(oracle::max_abs(matexp_unitary(oracle::pauli_x(), std::numbers::pi / 2) - expected), 1e-14);
}

TEST(Matexp, AgreesWithTaylorOracle) {
    std::mt19937_64 rng(5);
    for (Index dim : {1, 2, 5, 9, 16}) {
        const CMatrix h = oracle::random_hermitian(dim, rng);
        EXPECT_LT(oracle::max_abs(matexp_unitary(h, 0.83) - oracle::expm(h, 0.83)), 1e-11) << dim;
    }
}

TEST(Matexp, GroupLawAndUnitarity) {
    std::mt19937_64 rng(6);
    for (Index dim = 1; dim <= 16; dim += 3) {
        const CMatrix h = oracle::random_hermitian(dim, rng);
        const CMatrix u = matexp_unitary(h, 0.4), v = matexp_unitary(h, 1.3);
        EXPECT_LT(oracle::max_abs(u * v - matexp_unitary(h, 1.7)), 1e-10);
        EXPECT_LT(unitarity_defect(u), 1e-10);
    }
}

TEST(Matexp, RejectsNonHermitianWithDeviation) {
    CMatrix h = oracle::pauli_x();
    h(0, 1) = 2.0;
    try {
        matexp_unitary(h, 1.0);
        FAIL() << "expected std::invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find('1'), std::string::npos) << e.what();
    }
}

TEST(Matexp, HermiticityToleranceScalesWithMagnitude) {
    CMatrix h = 1e6 * oracle::pauli_x();
    h(0, 1) += 1e-8;  // relative deviation 1e-14
    EXPECT_NO_THROW(matexp_unitary(h, 1e-6));
    CMatrix small = oracle::pauli_x();
    small(0, 1) += 1e-9;
    EXPECT_THROW(matexp_unitary(small, 1.0), std::invalid_argument);
}

TEST(HermitianEvolution, EvolveMatchesUnitary) {
    std::mt19937_64 rng(7);
    const CMatrix h = oracle::random_hermitian(6, rng);
    const HermitianEvolution ev(h);
    CVector psi = oracle::random_complex(6, 1, rng).col(0);
    psi.normalize();
    EXPECT_LT((ev.evolve(psi, 2.1) - ev.unitary(2.1) * psi).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_EQ(ev.dim(), 6);
}

TEST(CompleteOrthogonal, StandardBasisCompletesItself) {
    const std::vector<RVector> rows{RVector::Unit(3, 0)};
    EXPECT_EQ(complete_orthogonal(rows), RMatrix(RMatrix::Identity(3, 3)));
}

TEST(CompleteOrthogonal, TwoByTwoSignConvention) {
    const std::vector<RVector> rows{RVector::Ones(2) / std::sqrt(2.0)};
    const RMatrix q = complete_orthogonal(rows);
    EXPECT_NEAR(q(1, 0), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(q(1, 1), -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(CompleteOrthogonal, RandomSeedRowsGiveOrthogonalMatrix) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    RMatrix seed(8, 8);
    for (Index i = 0; i < seed.size(); ++i) seed.data()[i] = g(rng);
    const Eigen::HouseholderQR<RMatrix> qr(seed);
    const RMatrix basis = qr.householderQ();
    const std::vector<RVector> rows{basis.col(0), basis.col(1), basis.col(2)};
    const RMatrix q = complete_orthogonal(rows);
    EXPECT_LT((q * q.transpose() - RMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-10);
    for (int r = 0; r < 3; ++r) EXPECT_LT((q.row(r).transpose() - rows[r]).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(CompleteOrthogonal, RejectsNonOrthonormalRows) {
    const std::vector<RVector> rows{RVector::Unit(2, 0), RVector::Ones(2)};
    EXPECT_THROW(complete_orthogonal(rows), std::invalid_argument);
}

TEST(MatchUpToPhase, RecoversPhase) {
    std::mt19937_64 rng(9);
    const CMatrix a = oracle::random_complex(3, 3, rng);
    const Complex phase = std::polar(1.0, 0.7);
    const PhaseMatch m = match_up_to_phase(phase * a, a, 1e-12);
    EXPECT_TRUE(m.holds);
    EXPECT_LT(std::abs(m.phase - phase), 1e-14);
    EXPECT_FALSE(match_up_to_phase(a, CMatrix(a.transpose()), 1e-9).holds);
}

TEST(Tolerances, EnvironmentOverrides) {
    ::setenv("PCPT_CPT_TOL", "1e-6", 1);
    EXPECT_DOUBLE_EQ(Tolerances::from_environment().cpt, 1e-6);
    ::setenv("PCPT_CPT_TOL", "-1", 1);
    EXPECT_THROW(Tolerances::from_environment(), std::invalid_argument);
    ::setenv("PCPT_CPT_TOL", "x", 1);
    EXPECT_THROW(Tolerances::from_environment(), std::invalid_argument);
    ::unsetenv("PCPT_CPT_TOL");
    EXPECT_DOUBLE_EQ(Tolerances::from_environment().cpt, Tolerances{}.cpt);
}
