#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pcpt/dynamics.hpp"
#include "pcpt/retrograde.hpp"
#include "pcpt/su2.hpp"

using namespace pcpt;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix sigma2() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, -1.0, 0.0;
    return m;
}

PulseSchedule random_schedule(Index dim, int segments, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dur(0.1, 1.0);
    std::vector<PulseSegment> s;
    for (int i = 0; i < segments; ++i) s.push_back({oracle::random_hermitian(dim, rng), dur(rng)});
    return PulseSchedule(std::move(s));
}

// A two-segment schedule whose U(T,0) equals `target` exactly.
PulseSchedule schedule_reaching(const CMatrix& target, std::mt19937_64& rng) {
    const Index dim = target.rows();
    const CMatrix h1 = oracle::random_hermitian(dim, rng);
    const double d1 = 0.7, d2 = 0.5;
    const CMatrix rest = target * oracle::expm(h1, d1).adjoint();  // = exp(-i h2 d2)
    const Eigen::ComplexEigenSolver<CMatrix> es(rest);
    CMatrix h2 = CMatrix::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        const double theta = std::arg(es.eigenvalues()(i));
        h2 += (-theta / d2) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }
    h2 = ((h2 + h2.adjoint()) / 2.0).eval();
    return PulseSchedule({{h1, d1}, {h2, d2}});
}

}  // namespace

TEST(PulseSchedule, Validation) {
    EXPECT_THROW(PulseSchedule({}), std::invalid_argument);
    EXPECT_THROW(PulseSchedule({{oracle::pauli_x(), 0.0}}), std::invalid_argument);
    EXPECT_THROW(PulseSchedule({{oracle::pauli_x(), 1.0}, {CMatrix::Zero(3, 3), 1.0}}), std::invalid_argument);
    CMatrix bad = oracle::pauli_x();
    bad(0, 1) = 3.0;
    EXPECT_THROW(PulseSchedule({{bad, 1.0}}), std::invalid_argument);
    const PulseSchedule ok({{oracle::pauli_x(), 1.0}, {oracle::pauli_z(), 0.5}});
    EXPECT_DOUBLE_EQ(ok.total_duration(), 1.5);
    EXPECT_EQ(ok.hamiltonian_at(0.99), oracle::pauli_x());
    EXPECT_EQ(ok.hamiltonian_at(1.0), oracle::pauli_z());
    EXPECT_EQ(ok.hamiltonian_at(1.5), oracle::pauli_z());
    EXPECT_THROW(ok.hamiltonian_at(1.6), std::invalid_argument);
}

TEST(OrderedPropagator, SingleSegmentAndIdentity) {
    std::mt19937_64 rng(1);
    const CMatrix h = oracle::random_hermitian(3, rng);
    const PulseSchedule s({{h, 2.0}});
    EXPECT_LT(oracle::max_abs(ordered_propagator(s, 0.0, 1.3) - oracle::expm(h, 1.3)), 1e-11);
    EXPECT_LT(oracle::max_abs(ordered_propagator(s, 0.8, 0.8) - CMatrix::Identity(3, 3)), 1e-15);
    EXPECT_THROW(ordered_propagator(s, 0.0, 2.5), std::invalid_argument);
    EXPECT_THROW(ordered_propagator(s, -0.1, 1.0), std::invalid_argument);
}

TEST(OrderedPropagator, CompositionOnRandomSchedules) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const PulseSchedule s = random_schedule(3, 3, rng);
        const double T = s.total_duration();
        double a = u(rng) * T, b = u(rng) * T, c = u(rng) * T;
        const CMatrix lhs = ordered_propagator(s, b, c) * ordered_propagator(s, a, b);
        EXPECT_LT(oracle::max_abs(lhs - ordered_propagator(s, a, c)), 1e-10);
    }
}

TEST(OrderedPropagator, TimeOrderLaterOnLeft) {
    const PulseSchedule s({{oracle::pauli_x(), 0.4}, {oracle::pauli_z(), 0.9}});
    const CMatrix expected = oracle::expm(oracle::pauli_z(), 0.9) * oracle::expm(oracle::pauli_x(), 0.4);
    EXPECT_LT(oracle::max_abs(ordered_propagator(s, 0.0, 1.3) - expected), 1e-12);
}

TEST(PythagoreanPulse, SignFactor) {
    for (auto [p, q] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{5, 3}, std::pair{7, 1}, std::pair{9, 7}}) {
        const PulseSchedule s = pythagorean_pulse(OddPair(p, q), 0.0);
        const double sign = ((p + q) / 2) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_LT(oracle::max_abs(ordered_propagator(s, 0.0, s.total_duration()) - sign * sigma2()), 1e-10) << p << q;
        const double tau = coupling_params(OddPair(p, q)).tau;
        ASSERT_EQ(s.segments().size(), 2u);
        EXPECT_EQ(s.segments()[0].duration, tau);
        EXPECT_EQ(s.segments()[1].duration, tau);
    }
}

TEST(PythagoreanPulse, HigherRepresentations) {
    for (int n : {3, 4, 5}) {
        const PulseSchedule s = pythagorean_pulse(OddPair(3, 1), 0.5, n);
        const PhaseMatch m = match_up_to_phase(ordered_propagator(s, 0.0, s.total_duration()),
                                               y_matrix(spin_generators(n)), 1e-9);
        EXPECT_TRUE(m.holds) << n;
    }
}

TEST(Retrograde, FactorizationOnRandomSchedules) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const PulseSchedule base = random_schedule(2 + trial % 2, 3, rng);
        const double T = base.total_duration();
        for (RetroVariant variant : {RetroVariant::retrograde, RetroVariant::semi}) {
            const RetrogradeSystem sys(base, variant);
            const double t0 = u(rng) * T, t1 = u(rng) * T;
            EXPECT_LT(oracle::max_abs(sys.propagator(t0, t1) - sys.factorized_propagator(t0, t1)), 1e-10);
            // Independent form of the factorization from the base propagators.
            CMatrix first = ordered_propagator(base, T - t0, T - t1);
            if (variant == RetroVariant::semi) first = first.conjugate().eval();
            EXPECT_LT(oracle::max_abs(sys.propagator(t0, t1) - oracle::kron(first, ordered_propagator(base, t0, t1))), 1e-10);
        }
    }
}

TEST(Retrograde, HamiltonianStructure) {
    std::mt19937_64 rng(4);
    const PulseSchedule base = random_schedule(2, 2, rng);
    const double T = base.total_duration();
    const RetrogradeSystem retro = retrograde_hamiltonian(base);
    const RetrogradeSystem semi = semi_retrograde_hamiltonian(base);
    const CMatrix id = CMatrix::Identity(2, 2);
    for (double t : {0.05 * T, 0.5 * T, 0.93 * T}) {
        const CMatrix expected = oracle::kron(-base.hamiltonian_at(T - t), id) + oracle::kron(id, base.hamiltonian_at(t));
        EXPECT_LT(oracle::max_abs(retro.hamiltonian_at(t) - expected), 1e-15);
        const CMatrix expected_semi =
            oracle::kron(base.hamiltonian_at(T - t).conjugate(), id) + oracle::kron(id, base.hamiltonian_at(t));
        EXPECT_LT(oracle::max_abs(semi.hamiltonian_at(t) - expected_semi), 1e-15);
    }
    EXPECT_EQ(retro.doubled().dim(), 4);
}

TEST(Retrograde, RealBaseSemiDiffersOnlyInFirstSign) {
    const PulseSchedule base = pythagorean_pulse(OddPair(3, 1), 0.0);
    const RetrogradeSystem retro = retrograde_hamiltonian(base), semi = semi_retrograde_hamiltonian(base);
    const double T = base.total_duration();
    const CMatrix id = CMatrix::Identity(2, 2);
    for (double t : {0.1 * T, 0.7 * T}) {
        const CMatrix diff = semi.hamiltonian_at(t) - retro.hamiltonian_at(t);
        EXPECT_LT(oracle::max_abs(diff - 2.0 * oracle::kron(base.hamiltonian_at(T - t), id)), 1e-14);
    }
}

TEST(Retrograde, TimeReversalSymmetricBase) {
    // H(t) = -H(T - t): the two factors carry the same Hamiltonian.
    std::mt19937_64 rng(5);
    const CMatrix h = oracle::random_hermitian(2, rng);
    const PulseSchedule base({{h, 0.5}, {CMatrix(-h), 0.5}});
    const RetrogradeSystem sys = retrograde_hamiltonian(base);
    const CMatrix id = CMatrix::Identity(2, 2);
    for (double t : {0.2, 0.8}) {
        const CMatrix ht = base.hamiltonian_at(t);
        EXPECT_LT(oracle::max_abs(sys.hamiltonian_at(t) - (oracle::kron(ht, id) + oracle::kron(id, ht))), 1e-15);
    }
}

TEST(Retrograde, PythagoreanHalfTimeImage) {
    const PulseSchedule base = pythagorean_pulse(OddPair(3, 1), 0.0);
    const CMatrix u = retrograde_hamiltonian(base).propagator(0.0, base.total_duration() / 2);
    const CVector image = u * oracle::vec(CMatrix::Identity(2, 2));
    EXPECT_LT((image - oracle::vec(sigma2())).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(SemiRetrograde, IdentityCase) {
    const PulseSchedule base({{oracle::pauli_z(), 2.0 * kPi}});
    const CMatrix u = semi_retrograde_hamiltonian(base).propagator(0.0, kPi);
    const CVector vi = oracle::vec(CMatrix::Identity(2, 2));
    EXPECT_LT((u * vi - vi).cwiseAbs().maxCoeff(), 1e-10);

    const PulseSchedule other({{oracle::pauli_z(), 1.0}});
    const CMatrix w = semi_retrograde_hamiltonian(other).propagator(0.0, 0.5);
    EXPECT_FALSE(match_up_to_phase(w * vi, vi, 1e-9).holds);
}

TEST(CheckEquivalence, PythagoreanPulses) {
    for (auto [p, q] : {std::pair{3, 1}, std::pair{5, 1}}) {
        const EquivalenceReport r = check_equivalence(pythagorean_pulse(OddPair(p, q), 0.0), sigma2());
        EXPECT_TRUE(r.forward);
        EXPECT_TRUE(r.backward);
        EXPECT_TRUE(r.cpt);
        EXPECT_TRUE(r.symmetry_precondition);
        const double sign = ((p + q) / 2) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_LT(std::abs(r.lhs_phase - sign), 1e-9);
    }
}

TEST(CheckEquivalence, SpinOneIsEquivalentButNotCpt) {
    const EquivalenceReport r =
        check_equivalence(pythagorean_pulse(OddPair(3, 1), 0.0, 3), y_matrix(spin_generators(3)));
    EXPECT_TRUE(r.forward);
    EXPECT_TRUE(r.backward);
    EXPECT_FALSE(r.cpt);
    EXPECT_NEAR(r.trace_y.real(), -1.0, 1e-10);
}

TEST(CheckEquivalence, SemiWithIdentityTarget) {
    const EquivalenceReport r = check_equivalence(PulseSchedule({{oracle::pauli_z(), 2.0 * kPi}}),
                                                  CMatrix::Identity(2, 2), RetroVariant::semi);
    EXPECT_TRUE(r.forward);
    EXPECT_TRUE(r.backward);
    EXPECT_FALSE(r.cpt);
    EXPECT_NEAR(r.trace_y.real(), 2.0, 1e-15);
}

TEST(CheckEquivalence, NegativeControl) {
    const EquivalenceReport r = check_equivalence(PulseSchedule({{oracle::pauli_z(), 1.0}}), sigma2());
    EXPECT_FALSE(r.forward);
    EXPECT_FALSE(r.backward);
    EXPECT_FALSE(r.lhs);
    EXPECT_FALSE(r.rhs);
}

TEST(CheckEquivalence, RejectsBadTarget) {
    const PulseSchedule base({{oracle::pauli_z(), 1.0}});
    EXPECT_THROW(check_equivalence(base, 2.0 * sigma2()), std::invalid_argument);
    EXPECT_THROW(check_equivalence(base, CMatrix::Identity(3, 3)), std::invalid_argument);
}

// Both sides evaluated directly, for schedules built to hit Sigma_2 and for
// random ones that miss it.
TEST(CheckEquivalence, BiconditionalOnRandomSchedules) {
    std::mt19937_64 rng(6);
    const CVector vi = oracle::vec(CMatrix::Identity(2, 2)) / std::sqrt(2.0);
    const CVector vy = oracle::vec(sigma2()) / std::sqrt(2.0);
    int hits = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const PulseSchedule base = trial % 2 == 0 ? schedule_reaching(std::polar(1.0, 0.3 * trial) * sigma2(), rng)
                                                  : random_schedule(2, 2, rng);
        const double T = base.total_duration();
        const bool lhs = match_up_to_phase(ordered_propagator(base, 0.0, T), sigma2(), 1e-9).holds;
        const CMatrix doubled = oracle::kron(ordered_propagator(base, T, T / 2), ordered_propagator(base, 0.0, T / 2));
        const bool rhs = match_up_to_phase(doubled * vi, vy, 1e-9).holds;
        const EquivalenceReport r = check_equivalence(base, sigma2());
        EXPECT_EQ(r.lhs, lhs);
        EXPECT_EQ(r.rhs, rhs);
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(r.forward, lhs && rhs);
        EXPECT_EQ(r.backward, lhs && rhs);
        hits += lhs ? 1 : 0;
    }
    EXPECT_EQ(hits, 15);
}

TEST(GeneralRecipe, ReducesToTwoLevelCpt) {
    const PulseSchedule base = pythagorean_pulse(OddPair(3, 1), 0.0);
    const double T = base.total_duration();
    const CMatrix uT = ordered_propagator(base, 0.0, T), uh = ordered_propagator(base, 0.0, T / 2);
    const CVector up = CVector::Unit(2, 0);
    const CVector f = uT * up;  // = -|down>
    const RecipeResult r = general_recipe(uT, uh, up, f, kPi);
    ASSERT_TRUE(r.preconditions_met) << r.message;
    EXPECT_TRUE(r.certified);
    // initial = (|uu> + |dd>)/sqrt2 = V(I)/sqrt2 and final = V(Sigma_2)/sqrt2 up to sign.
    const CVector vi = oracle::vec(CMatrix::Identity(2, 2)) / std::sqrt(2.0);
    const CVector vy = oracle::vec(sigma2()) / std::sqrt(2.0);
    EXPECT_TRUE(match_up_to_phase(r.initial, vi, 1e-12).holds);
    EXPECT_TRUE(match_up_to_phase(r.final_state, vy, 1e-9).holds);
}

TEST(GeneralRecipe, RandomFiveLevelTimeIndependent) {
    std::mt19937_64 rng(7);
    const CMatrix v = oracle::random_unitary(5, rng);
    RVector energies(5);
    energies << 0.0, 1.0, 2.5, -0.7, 3.2;
    const CMatrix h = v * energies.cast<Complex>().asDiagonal() * v.adjoint();
    // |i> mixes eigenstates 0 and 1 (gap 1). With T = pi, U(T) flips their relative
    // sign and U(2T) returns |i> up to a phase.
    const CVector i = (v.col(0) + v.col(1)) / std::sqrt(2.0);
    const double T = kPi;
    const CMatrix uT = oracle::expm(h, T), uh = oracle::expm(h, T / 2);
    const CVector f = uT * i;
    const PhaseMatch back = match_up_to_phase(CMatrix(uT * f), CMatrix(i), 1e-9);
    ASSERT_TRUE(back.holds);
    const RecipeResult r = general_recipe(uT, uh, i, f, std::arg(back.phase));
    ASSERT_TRUE(r.preconditions_met) << r.message;
    EXPECT_TRUE(r.certified);
    EXPECT_NEAR(r.initial.norm(), 1.0, 1e-12);
    EXPECT_NEAR(r.final_state.norm(), 1.0, 1e-12);
    EXPECT_LT(std::abs(r.initial.dot(r.final_state)), 1e-9);
    // Brute force: propagate the doubled system directly.
    const PulseSchedule base({{h, T}});
    const CMatrix doubled = retrograde_hamiltonian(base).propagator(0.0, T / 2);
    EXPECT_LT((doubled * r.initial - r.final_state).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(GeneralRecipe, ConditionFailuresAreNamed) {
    const PulseSchedule base = pythagorean_pulse(OddPair(3, 1), 0.0);
    const double T = base.total_duration();
    const CMatrix uT = ordered_propagator(base, 0.0, T), uh = ordered_propagator(base, 0.0, T / 2);
    const CVector up = CVector::Unit(2, 0);
    const RecipeResult same = general_recipe(uT, uh, up, up, 0.0);
    EXPECT_FALSE(same.preconditions_met);
    EXPECT_EQ(same.violated, RecipeCondition::overlap);
    const RecipeResult wrong_f = general_recipe(uT, uh, up, CVector::Unit(2, 1), 0.0);
    EXPECT_EQ(wrong_f.violated, RecipeCondition::forward_map);
    const RecipeResult wrong_phi = general_recipe(uT, uh, up, uT * up, 0.0);
    EXPECT_EQ(wrong_phi.violated, RecipeCondition::return_map);
    EXPECT_EQ(general_recipe(uT, uh, up, CVector::Unit(3, 0), 0.0).violated, RecipeCondition::shape);
    EXPECT_EQ(general_recipe(uT, uh, CVector::Ones(2), uT * up, 0.0).violated, RecipeCondition::normalization);
    EXPECT_FALSE(std::string(to_string(RecipeCondition::overlap)).empty());
}

TEST(TimeIndependent, SigmaZSuperposition) {
    const CVector i = CVector::Ones(2) / std::sqrt(2.0);
    const TimeIndependentReport r = time_independent_conditions(oracle::pauli_z(), i, kPi / 2);
    // U(pi) = -I, so phi = pi; U(pi/2) = -i sigma_z is orthogonal to the start.
    EXPECT_TRUE(r.return_condition);
    EXPECT_NEAR(std::abs(r.phi), kPi, 1e-12);
    EXPECT_TRUE(r.overlap_condition);
    EXPECT_NEAR(r.overlap, 0.0, 1e-12);
    EXPECT_TRUE(r.family_certified);
    EXPECT_EQ(r.family.size(), 8u);
}

TEST(TimeIndependent, EigenstateFailsOverlap) {
    const TimeIndependentReport r = time_independent_conditions(oracle::pauli_z(), CVector::Unit(2, 0), 1.0);
    EXPECT_TRUE(r.return_condition);
    EXPECT_FALSE(r.overlap_condition);
    EXPECT_TRUE(r.family.empty());
}

TEST(TimeIndependent, CommensurateFourLevel) {
    std::mt19937_64 rng(8);
    const CMatrix v = oracle::random_unitary(4, rng);
    RVector energies(4);
    energies << -1.0, 0.5, 2.0, 3.0;  // gap between states 0 and 2 is 3
    const CMatrix h = v * energies.cast<Complex>().asDiagonal() * v.adjoint();
    const CVector i = (0.6 * v.col(0) + 0.8 * v.col(2));
    const TimeIndependentReport r = time_independent_conditions(h, i, kPi / 3, 12);
    EXPECT_TRUE(r.return_condition);
    EXPECT_TRUE(r.overlap_condition);
    EXPECT_TRUE(r.family_certified);
}

TEST(TimeIndependent, RejectsUnnormalized) {
    EXPECT_THROW(time_independent_conditions(oracle::pauli_z(), CVector::Ones(2), 1.0), std::invalid_argument);
}

TEST(BasicCpts, FourLevelRecords) {
    const BasicCptReport r = basic_cpts(4, OddPair(3, 1), 0.0);
    ASSERT_EQ(r.basic.size(), 2u);
    EXPECT_LT((r.basic[0].initial - (oracle::ket(4, {0, 0}) + oracle::ket(4, {3, 3})) / std::sqrt(2.0)).norm(), 1e-15);
    EXPECT_LT((r.basic[1].initial - (oracle::ket(4, {1, 1}) + oracle::ket(4, {2, 2})) / std::sqrt(2.0)).norm(), 1e-15);
    for (const BasicCptRecord& b : r.basic) {
        EXPECT_LT(b.orthogonality, 1e-9);
        EXPECT_TRUE(b.certified);
    }
    EXPECT_EQ(r.family.size(), 20u);
    EXPECT_LT(r.family_max_overlap, 1e-9);
    const CVector expected = 0.5 * (oracle::ket(4, {3, 0}) - oracle::ket(4, {2, 1}) + oracle::ket(4, {1, 2}) -
                                    oracle::ket(4, {0, 3}));
    EXPECT_LT((r.universal_final - expected).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_TRUE(r.certified);
}

TEST(BasicCpts, MeasuredPhaseAndUniversality) {
    const BasicCptReport a = basic_cpts(4, OddPair(3, 1), 0.0);
    const BasicCptReport b = basic_cpts(4, OddPair(5, 1), 0.0);
    EXPECT_LT(std::abs(a.measured_phase - 1.0), 1e-9);
    EXPECT_LT(std::abs(b.measured_phase + 1.0), 1e-9);
    EXPECT_LT((a.universal_final - b.universal_final).cwiseAbs().maxCoeff(), 1e-9);
    double diff = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        diff = std::max(diff, (a.basic[i].final_state - b.basic[i].final_state).cwiseAbs().maxCoeff());
    EXPECT_GT(diff, 0.1);
}

TEST(BasicCpts, TwoLevelSingleRecordIsUniversal) {
    const BasicCptReport r = basic_cpts(2, OddPair(3, 1), 0.5);
    ASSERT_EQ(r.basic.size(), 1u);
    EXPECT_LT((r.basic[0].initial - r.universal_initial).norm(), 1e-15);
    EXPECT_LT((r.basic[0].final_state - r.universal_final).norm(), 1e-12);
}

TEST(BasicCpts, RejectsOddDimension) {
    EXPECT_THROW(basic_cpts(3, OddPair(3, 1), 0.0), std::invalid_argument);
}

TEST(OddDimension, SpinOneDemo) {
    const OddDimensionReport r = odd_dim_demo(OddPair(3, 1), 0.0);
    EXPECT_LT((r.images[0] - CVector::Unit(3, 2)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((r.images[1] + CVector::Unit(3, 1)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((r.images[2] - CVector::Unit(3, 0)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_NEAR(r.identity_overlap, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(r.identity_to_y_fidelity, 1.0, 1e-9);
    EXPECT_LT(r.basic_orthogonality, 1e-9);
    EXPECT_TRUE(r.basic_certified);
    EXPECT_FALSE(r.is_cpt);
}
