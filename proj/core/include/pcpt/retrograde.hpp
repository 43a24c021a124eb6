#pragma once

// Piecewise-constant pulses, their forward/backward ("retrograde") doubled
// dynamics, and the transfer recipes built on them.

#include <array>
#include <string>
#include <vector>

#include "pcpt/matrix.hpp"
#include "pcpt/pythagorean.hpp"

namespace pcpt {

struct PulseSegment {
    CMatrix h;
    double duration = 0.0;
};

class PulseSchedule {
public:
    // Throws std::invalid_argument for an empty schedule, mismatched
    // dimensions, non-positive durations or non-Hermitian segments.
    explicit PulseSchedule(std::vector<PulseSegment> segments, const Tolerances& tol = {});

    const std::vector<PulseSegment>& segments() const noexcept { return segments_; }
    double total_duration() const noexcept { return total_; }
    Index dim() const noexcept { return segments_.front().h.rows(); }

    // H(t); segments are closed on the left, the last one also on the right.
    const CMatrix& hamiltonian_at(double t) const;
    // 0, cumulative segment ends ..., T
    std::vector<double> breakpoints() const;

private:
    std::vector<PulseSegment> segments_;
    double total_ = 0.0;
};

// U(t1, t0): evolution from t0 to t1 (t1 < t0 runs backwards). Both times
// must lie in [0, T].
CMatrix ordered_propagator(const PulseSchedule& schedule, double t0, double t1,
                           const Tolerances& tol = {});

// Two segments of length tau: h(delta1, omega1), then -h(delta2, omega2), in
// the n-dimensional representation. U(2 tau, 0) = (-1)^{(p+q)/2} Y_n.
PulseSchedule pythagorean_pulse(const OddPair& pair, double k, int n = 2);

enum class RetroVariant { retrograde, semi };

const char* to_string(RetroVariant variant);

// The doubled system on (base dim)^2 levels:
//   retrograde: -H(T - t) (x) I + I (x) H(t)
//   semi:        H*(T - t) (x) I + I (x) H(t)
class RetrogradeSystem {
public:
    RetrogradeSystem(PulseSchedule base, RetroVariant variant, const Tolerances& tol = {});

    const PulseSchedule& base() const noexcept { return base_; }
    // Piecewise-constant form of the doubled Hamiltonian, split at every
    // breakpoint of H(t) and of H(T - t).
    const PulseSchedule& doubled() const noexcept { return doubled_; }
    RetroVariant variant() const noexcept { return variant_; }

    CMatrix hamiltonian_at(double t) const;
    // Propagator of the doubled schedule from t0 to t1.
    CMatrix propagator(double t0, double t1) const;
    // U(T - t1, T - t0) (x) U(t1, t0), conjugating the first factor for semi.
    CMatrix factorized_propagator(double t0, double t1) const;

private:
    CMatrix doubled_at(double t) const;

    PulseSchedule base_;
    RetroVariant variant_;
    Tolerances tol_;
    PulseSchedule doubled_;
};

RetrogradeSystem retrograde_hamiltonian(const PulseSchedule& base, const Tolerances& tol = {});
RetrogradeSystem semi_retrograde_hamiltonian(const PulseSchedule& base,
                                             const Tolerances& tol = {});

// U(T,0) = y  <=>  U_doubled(T/2, 0) V(I) = V(y), each side up to a global
// phase. `forward` holds when U(T,0) = y and the doubled image of V(I) is
// then V(y); `backward` when the image is V(y) and U(T,0) = y follows.
struct EquivalenceReport {
    RetroVariant variant = RetroVariant::retrograde;
    bool forward = false;
    bool backward = false;
    bool lhs = false;  // U(T,0) = phase * y
    bool rhs = false;  // U_doubled(T/2,0) V(I)/sqrt(n) = phase * V(y)/sqrt(n)
    Complex lhs_phase{1.0, 0.0};
    Complex rhs_phase{1.0, 0.0};
    double lhs_residual = 0.0;
    double rhs_residual = 0.0;
    // u y u^T = y (retrograde) or u y u^dagger = y (semi) for every segment
    // propagator u.
    bool symmetry_precondition = false;
    double symmetry_residual = 0.0;
    Complex trace_y{0.0, 0.0};
    double identity_overlap = 0.0;  // |<V(I), V(y)>| / n
    bool cpt = false;               // tr y = 0

    bool consistent() const noexcept { return lhs == rhs; }
};

// Throws std::invalid_argument if y is not a unitary of the base dimension.
EquivalenceReport check_equivalence(const PulseSchedule& base, const CMatrix& y,
                                    RetroVariant variant = RetroVariant::retrograde,
                                    const Tolerances& tol = {});

enum class RecipeCondition { none, shape, normalization, overlap, forward_map, return_map };

const char* to_string(RecipeCondition condition);

struct RecipeResult {
    bool preconditions_met = false;
    RecipeCondition violated = RecipeCondition::none;
    std::string message;
    double overlap = 0.0;           // |<i|f>|
    CVector initial;                // (-e^{i phi}|ii> + |ff>), normalized
    CVector final_state;            // (-|hg> + |gh>), normalized
    double map_residual = 0.0;      // max |U_doubled(T/2,0) initial - final|
    double orthogonality = 0.0;     // |<initial|final>|
    bool certified = false;
};

// Multi-state transfer from two states with U(T,0)|i> = |f>,
// U(T,0)|f> = e^{i phi}|i> and |<i|f>| < 1. u_full = U(T,0),
// u_half = U(T/2,0). Precondition failures are reported, not thrown.
RecipeResult general_recipe(const CMatrix& u_full, const CMatrix& u_half, const CVector& i,
                            const CVector& f, double phi, const Tolerances& tol = {});

struct FamilySample {
    double t = 0.0;
    double orthogonality = 0.0;
};

struct TimeIndependentReport {
    bool return_condition = false;  // U(2T)|i> = e^{i phi}|i>
    double phi = 0.0;
    double return_residual = 0.0;
    bool overlap_condition = false;  // |<i|U(T)|i>| < 1
    double overlap = 0.0;
    std::vector<FamilySample> family;  // filled when both conditions hold
    bool family_certified = false;
};

TimeIndependentReport time_independent_conditions(const CMatrix& h, const CVector& i, double T,
                                                  std::size_t samples = 8,
                                                  const Tolerances& tol = {});

struct BasicCptRecord {
    int index = 0;           // i in 1..n/2
    CVector initial;         // (|ii> + |n+1-i, n+1-i>)/sqrt(2)
    CVector final_state;     // image at T/2, divided by the measured phase
    double orthogonality = 0.0;
    bool certified = false;
};

struct FamilyCheck {
    std::vector<Complex> coefficients;
    double orthogonality = 0.0;
};

struct BasicCptReport {
    int n = 0;
    // Phase of U(T,0) relative to Y_n; equals (-1)^{(p+q)/2}. Final states
    // below are divided by it.
    Complex measured_phase{1.0, 0.0};
    std::vector<BasicCptRecord> basic;
    std::vector<FamilyCheck> family;
    double family_max_overlap = 0.0;
    CVector universal_initial;    // V(I)/sqrt(n)
    CVector universal_final;      // image at T/2 divided by the measured phase
    CVector universal_reference;  // V(Y)/sqrt(n)
    double universal_error = 0.0;
    bool certified = false;
};

// Throws std::invalid_argument for odd n.
BasicCptReport basic_cpts(int n, const OddPair& pair, double k, const Tolerances& tol = {});

struct OddDimensionReport {
    CMatrix u_full;  // U(T,0) for the spin-1 lift
    Complex y_phase{1.0, 0.0};
    double y_residual = 0.0;       // max |U(T,0) - phase * Y_3|
    double action_residual = 0.0;  // max |U(T,0) - [[0,0,1],[0,-1,0],[1,0,0]]|
    std::array<CVector, 3> images;  // U(T,0)|1>, |2>, |3>
    CVector basic_initial;          // (-|11> + |33>)/sqrt(2)
    CVector basic_final;
    double basic_orthogonality = 0.0;
    bool basic_certified = false;
    double identity_overlap = 0.0;  // |<V(I)/sqrt3, V(Y)/sqrt3>| = 1/3
    double identity_to_y_fidelity = 0.0;
    bool is_cpt = false;
};

OddDimensionReport odd_dim_demo(const OddPair& pair, double k, const Tolerances& tol = {});

}  // namespace pcpt
