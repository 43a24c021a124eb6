#include "pcpt/retrograde.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pcpt/dynamics.hpp"
#include "pcpt/su2.hpp"

namespace pcpt {

namespace {

double time_slack(double total) { return 1e-12 * std::max(1.0, total); }

CVector basis_pair(Index n, Index a, Index b) {
    return kron(CVector(CVector::Unit(n, a)), CVector(CVector::Unit(n, b)));
}

CVector scaled_identity(Index n) {
    return vectorize(CMatrix(CMatrix::Identity(n, n))) / std::sqrt(static_cast<double>(n));
}

void require_state(const CVector& psi, Index dim, const char* what) {
    if (psi.size() != dim) {
        std::ostringstream msg;
        msg << what << ": state of length " << psi.size() << ", expected " << dim;
        throw std::invalid_argument(msg.str());
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << what << ": state is not normalized (norm " << psi.norm() << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

PulseSchedule::PulseSchedule(std::vector<PulseSegment> segments, const Tolerances& tol)
    : segments_(std::move(segments)) {
    if (segments_.empty()) throw std::invalid_argument("PulseSchedule: no segments");
    const Index dim = segments_.front().h.rows();
    for (const PulseSegment& s : segments_) {
        if (s.h.rows() != dim || s.h.cols() != dim) {
            throw std::invalid_argument("PulseSchedule: segments differ in dimension");
        }
        if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
            throw std::invalid_argument("PulseSchedule: durations must be positive, got " +
                                        std::to_string(s.duration));
        }
        require_hermitian(s.h, tol, "PulseSchedule");
        total_ += s.duration;
    }
}

const CMatrix& PulseSchedule::hamiltonian_at(double t) const {
    if (t < -time_slack(total_) || t > total_ + time_slack(total_)) {
        throw std::invalid_argument("PulseSchedule::hamiltonian_at: t=" + std::to_string(t) +
                                    " outside [0, " + std::to_string(total_) + "]");
    }
    double end = 0.0;
    for (const PulseSegment& s : segments_) {
        end += s.duration;
        if (t < end) return s.h;
    }
    return segments_.back().h;
}

std::vector<double> PulseSchedule::breakpoints() const {
    std::vector<double> out{0.0};
    double end = 0.0;
    for (const PulseSegment& s : segments_) {
        end += s.duration;
        out.push_back(end);
    }
    out.back() = total_;
    return out;
}

CMatrix ordered_propagator(const PulseSchedule& schedule, double t0, double t1,
                           const Tolerances& tol) {
    const double total = schedule.total_duration();
    const double slack = time_slack(total);
    for (double t : {t0, t1}) {
        if (t < -slack || t > total + slack) {
            std::ostringstream msg;
            msg << "ordered_propagator: t=" << t << " outside [0, " << total << "]";
            throw std::invalid_argument(msg.str());
        }
    }
    if (t1 < t0) return ordered_propagator(schedule, t1, t0, tol).adjoint();

    CMatrix u = CMatrix::Identity(schedule.dim(), schedule.dim());
    double start = 0.0;
    for (const PulseSegment& s : schedule.segments()) {
        const double stop = start + s.duration;
        const double lo = std::max(start, t0);
        const double hi = std::min(stop, t1);
        if (hi > lo) u = matexp_unitary(s.h, hi - lo, tol) * u;
        start = stop;
    }
    return u;
}

PulseSchedule pythagorean_pulse(const OddPair& pair, double k, int n) {
    const CouplingParams p = coupling_params(pair, k);
    return PulseSchedule({{build_h_single(n, p.delta1, p.omega1), p.tau},
                          {-build_h_single(n, p.delta2, p.omega2), p.tau}});
}

const char* to_string(RetroVariant variant) {
    return variant == RetroVariant::retrograde ? "retrograde" : "semi";
}

RetrogradeSystem::RetrogradeSystem(PulseSchedule base, RetroVariant variant,
                                   const Tolerances& tol)
    : base_(std::move(base)), variant_(variant), tol_(tol), doubled_([&] {
          const double total = base_.total_duration();
          std::vector<double> cuts = base_.breakpoints();
          for (double b : base_.breakpoints()) cuts.push_back(total - b);
          std::sort(cuts.begin(), cuts.end());
          std::vector<double> merged;
          for (double c : cuts) {
              c = std::clamp(c, 0.0, total);
              if (merged.empty() || c - merged.back() > time_slack(total)) merged.push_back(c);
          }
          merged.back() = total;
          std::vector<PulseSegment> segments;
          for (std::size_t s = 0; s + 1 < merged.size(); ++s) {
              const double mid = 0.5 * (merged[s] + merged[s + 1]);
              segments.push_back({doubled_at(mid), merged[s + 1] - merged[s]});
          }
          return PulseSchedule(std::move(segments), tol);
      }()) {}

CMatrix RetrogradeSystem::doubled_at(double t) const {
    const double total = base_.total_duration();
    const CMatrix identity = CMatrix::Identity(base_.dim(), base_.dim());
    const CMatrix& reversed = base_.hamiltonian_at(std::clamp(total - t, 0.0, total));
    const CMatrix first = variant_ == RetroVariant::retrograde ? CMatrix(-reversed)
                                                               : CMatrix(reversed.conjugate());
    return kron(first, identity) + kron(identity, base_.hamiltonian_at(t));
}

CMatrix RetrogradeSystem::hamiltonian_at(double t) const { return doubled_at(t); }

CMatrix RetrogradeSystem::propagator(double t0, double t1) const {
    return ordered_propagator(doubled_, t0, t1, tol_);
}

CMatrix RetrogradeSystem::factorized_propagator(double t0, double t1) const {
    const double total = base_.total_duration();
    CMatrix mirrored = ordered_propagator(base_, total - t0, total - t1, tol_);
    if (variant_ == RetroVariant::semi) mirrored = mirrored.conjugate().eval();
    return kron(mirrored, ordered_propagator(base_, t0, t1, tol_));
}

RetrogradeSystem retrograde_hamiltonian(const PulseSchedule& base, const Tolerances& tol) {
    return RetrogradeSystem(base, RetroVariant::retrograde, tol);
}

RetrogradeSystem semi_retrograde_hamiltonian(const PulseSchedule& base, const Tolerances& tol) {
    return RetrogradeSystem(base, RetroVariant::semi, tol);
}

EquivalenceReport check_equivalence(const PulseSchedule& base, const CMatrix& y,
                                    RetroVariant variant, const Tolerances& tol) {
    const Index n = base.dim();
    if (y.rows() != n || y.cols() != n) {
        std::ostringstream msg;
        msg << "check_equivalence: y is " << y.rows() << "x" << y.cols() << ", pulse acts on "
            << n << " levels";
        throw std::invalid_argument(msg.str());
    }
    const double defect = unitarity_defect(y);
    if (!(defect <= tol.unitary)) {
        std::ostringstream msg;
        msg << "check_equivalence: y is not unitary (max |y^dagger y - I| = " << defect << ")";
        throw std::invalid_argument(msg.str());
    }

    EquivalenceReport report;
    report.variant = variant;

    for (const PulseSegment& s : base.segments()) {
        const CMatrix u = matexp_unitary(s.h, s.duration, tol);
        const CMatrix moved = variant == RetroVariant::retrograde ? CMatrix(u * y * u.transpose())
                                                                  : CMatrix(u * y * u.adjoint());
        report.symmetry_residual = std::max(report.symmetry_residual, (moved - y).cwiseAbs().maxCoeff());
    }
    report.symmetry_precondition = report.symmetry_residual <= tol.cpt;

    const double total = base.total_duration();
    const PhaseMatch lhs = match_up_to_phase(ordered_propagator(base, 0.0, total, tol), y, tol.cpt);
    report.lhs = lhs.holds;
    report.lhs_phase = lhs.phase;
    report.lhs_residual = lhs.residual;

    const RetrogradeSystem doubled(base, variant, tol);
    const CVector start = scaled_identity(n);
    const CVector goal = vectorize(y) / std::sqrt(static_cast<double>(n));
    const CVector image = doubled.propagator(0.0, 0.5 * total) * start;
    const PhaseMatch rhs = match_up_to_phase(image, goal, tol.cpt);
    report.rhs = rhs.holds;
    report.rhs_phase = rhs.phase;
    report.rhs_residual = rhs.residual;

    report.forward = report.lhs && report.rhs;
    report.backward = report.rhs && report.lhs;

    report.trace_y = y.trace();
    report.identity_overlap = std::abs(report.trace_y) / static_cast<double>(n);
    report.cpt = report.identity_overlap <= tol.cpt;
    return report;
}

const char* to_string(RecipeCondition condition) {
    switch (condition) {
        case RecipeCondition::none:
            return "none";
        case RecipeCondition::shape:
            return "shape";
        case RecipeCondition::normalization:
            return "normalization";
        case RecipeCondition::overlap:
            return "condition 1: |<i|f>| < 1";
        case RecipeCondition::forward_map:
            return "condition 2: U(T,0)|i> = |f>";
        case RecipeCondition::return_map:
            return "condition 3: U(T,0)|f> = e^{i phi}|i>";
    }
    return "unknown";
}

RecipeResult general_recipe(const CMatrix& u_full, const CMatrix& u_half, const CVector& i,
                            const CVector& f, double phi, const Tolerances& tol) {
    RecipeResult result;
    const auto fail = [&](RecipeCondition c, std::string message) {
        result.violated = c;
        result.message = std::move(message);
        return result;
    };

    const Index n = u_full.rows();
    if (u_full.cols() != n || u_half.rows() != n || u_half.cols() != n || i.size() != n ||
        f.size() != n) {
        return fail(RecipeCondition::shape, "propagators and states differ in dimension");
    }
    if (std::abs(i.norm() - 1.0) > 1e-10 || std::abs(f.norm() - 1.0) > 1e-10) {
        return fail(RecipeCondition::normalization, "|i> and |f> must be normalized");
    }
    result.overlap = std::abs(i.dot(f));
    if (!(result.overlap < 1.0 - tol.cpt)) {
        return fail(RecipeCondition::overlap,
                    "|<i|f>| = " + std::to_string(result.overlap) + " is not below 1");
    }
    const Complex e_phi = std::exp(kI * phi);
    const double forward = (u_full * i - f).cwiseAbs().maxCoeff();
    if (forward > tol.cpt) {
        return fail(RecipeCondition::forward_map,
                    "max |U(T,0)|i> - |f>| = " + std::to_string(forward));
    }
    const double back = (u_full * f - e_phi * i).cwiseAbs().maxCoeff();
    if (back > tol.cpt) {
        return fail(RecipeCondition::return_map,
                    "max |U(T,0)|f> - e^{i phi}|i>| = " + std::to_string(back));
    }
    result.preconditions_met = true;

    CVector initial = -e_phi * kron(i, i) + kron(f, f);
    initial /= initial.norm();
    const CVector g = u_half * i;
    const CVector h = u_half * f;
    CVector final_state = -kron(h, g) + kron(g, h);
    final_state /= final_state.norm();

    // U_doubled(T/2, 0) = U(T/2, T) (x) U(T/2, 0), with U(T/2, T) = U(T/2,0) U(T,0)^dagger.
    const CMatrix doubled = kron(CMatrix(u_half * u_full.adjoint()), u_half);
    result.map_residual = (doubled * initial - final_state).cwiseAbs().maxCoeff();
    result.orthogonality = std::abs(initial.dot(final_state));
    result.initial = std::move(initial);
    result.final_state = std::move(final_state);
    result.certified = result.map_residual <= tol.cpt && result.orthogonality <= tol.cpt;
    return result;
}

TimeIndependentReport time_independent_conditions(const CMatrix& h, const CVector& i, double T,
                                                  std::size_t samples, const Tolerances& tol) {
    const HermitianEvolution evolution(h, tol);
    require_state(i, evolution.dim(), "time_independent_conditions");

    TimeIndependentReport report;
    const CVector returned = evolution.evolve(i, 2.0 * T);
    const PhaseMatch back = match_up_to_phase(returned, i, tol.cpt);
    report.phi = std::arg(back.phase);
    report.return_residual = back.residual;
    report.return_condition = back.holds;

    const CVector f = evolution.evolve(i, T);
    report.overlap = std::abs(i.dot(f));
    report.overlap_condition = report.overlap < 1.0 - tol.cpt;
    if (!report.return_condition || !report.overlap_condition) return report;

    CVector initial = -std::exp(kI * report.phi) * kron(i, i) + kron(f, f);
    initial /= initial.norm();
    const CMatrix doubled =
        kron(evolution.unitary(-0.5 * T), evolution.unitary(0.5 * T));  // exp(iHT/2) (x) exp(-iHT/2)

    report.family_certified = true;
    for (std::size_t s = 0; s < samples; ++s) {
        const double t = 2.0 * T * static_cast<double>(s) / static_cast<double>(std::max<std::size_t>(samples, 1));
        const CMatrix u = evolution.unitary(t);
        const CVector start = kron(u, u) * initial;
        const double orth = std::abs(start.dot(doubled * start));
        report.family.push_back({t, orth});
        if (orth > tol.cpt) report.family_certified = false;
    }
    return report;
}

BasicCptReport basic_cpts(int n, const OddPair& pair, double k, const Tolerances& tol) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("basic_cpts: n must be even, got " + std::to_string(n));
    }
    const PulseSchedule pulse = pythagorean_pulse(pair, k, n);
    const double total = pulse.total_duration();
    const CMatrix y = y_matrix(spin_generators(n));

    BasicCptReport report;
    report.n = n;
    report.measured_phase =
        match_up_to_phase(ordered_propagator(pulse, 0.0, total, tol), y, tol.cpt).phase;
    const Complex unphase = std::conj(report.measured_phase);

    const CMatrix doubled = retrograde_hamiltonian(pulse, tol).propagator(0.0, 0.5 * total);

    std::vector<CVector> starts;
    bool certified = true;
    for (int idx = 1; idx <= n / 2; ++idx) {
        BasicCptRecord record;
        record.index = idx;
        record.initial = (basis_pair(n, idx - 1, idx - 1) + basis_pair(n, n - idx, n - idx)) /
                         std::sqrt(2.0);
        const CVector image = doubled * record.initial;
        record.orthogonality = std::abs(record.initial.dot(image));
        record.final_state = unphase * image;
        record.certified = record.orthogonality <= tol.cpt;
        certified = certified && record.certified;
        starts.push_back(record.initial);
        report.basic.push_back(std::move(record));
    }

    std::mt19937_64 rng(0x5eed'c0de'2024ULL);
    std::normal_distribution<double> gauss;
    constexpr int kFamilySamples = 20;
    for (int s = 0; s < kFamilySamples; ++s) {
        FamilyCheck check;
        double norm2 = 0.0;
        for (std::size_t b = 0; b < starts.size(); ++b) {
            check.coefficients.emplace_back(gauss(rng), gauss(rng));
            norm2 += std::norm(check.coefficients.back());
        }
        CVector start = CVector::Zero(static_cast<Index>(n) * n);
        for (std::size_t b = 0; b < starts.size(); ++b) {
            check.coefficients[b] /= std::sqrt(norm2);
            start += check.coefficients[b] * starts[b];
        }
        check.orthogonality = std::abs(start.dot(doubled * start));
        report.family_max_overlap = std::max(report.family_max_overlap, check.orthogonality);
        report.family.push_back(std::move(check));
    }
    certified = certified && report.family_max_overlap <= tol.cpt;

    report.universal_initial = scaled_identity(n);
    report.universal_final = unphase * (doubled * report.universal_initial);
    report.universal_reference = vectorize(y) / std::sqrt(static_cast<double>(n));
    report.universal_error =
        (report.universal_final - report.universal_reference).cwiseAbs().maxCoeff();
    report.certified = certified && report.universal_error <= tol.cpt;
    return report;
}

OddDimensionReport odd_dim_demo(const OddPair& pair, double k, const Tolerances& tol) {
    constexpr int n = 3;
    const PulseSchedule pulse = pythagorean_pulse(pair, k, n);
    const double total = pulse.total_duration();
    const CMatrix y = y_matrix(spin_generators(n));

    OddDimensionReport report;
    report.u_full = ordered_propagator(pulse, 0.0, total, tol);
    const PhaseMatch match = match_up_to_phase(report.u_full, y, tol.cpt);
    report.y_phase = match.phase;
    report.y_residual = match.residual;

    CMatrix printed = CMatrix::Zero(n, n);
    printed(0, 2) = 1.0;
    printed(1, 1) = -1.0;
    printed(2, 0) = 1.0;
    report.action_residual = (report.u_full - printed).cwiseAbs().maxCoeff();
    for (Index j = 0; j < n; ++j) report.images[static_cast<std::size_t>(j)] = report.u_full.col(j);

    const CMatrix doubled = retrograde_hamiltonian(pulse, tol).propagator(0.0, 0.5 * total);
    report.basic_initial = (-basis_pair(n, 0, 0) + basis_pair(n, 2, 2)) / std::sqrt(2.0);
    report.basic_final = doubled * report.basic_initial;
    report.basic_orthogonality = std::abs(report.basic_initial.dot(report.basic_final));
    report.basic_certified = report.basic_orthogonality <= tol.cpt;

    const CVector start = scaled_identity(n);
    const CVector goal = vectorize(y) / std::sqrt(static_cast<double>(n));
    report.identity_overlap = std::abs(start.dot(goal));
    report.identity_to_y_fidelity = std::norm(goal.dot(doubled * start));
    report.is_cpt = report.identity_overlap <= tol.cpt;
    return report;
}

}  // namespace pcpt
