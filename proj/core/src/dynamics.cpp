#include "pcpt/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pcpt/frames.hpp"
#include "pcpt/su2.hpp"

namespace pcpt {

namespace {

void require_even(int n, const char* what) {
    if (n < 2 || n % 2 != 0) {
        std::ostringstream msg;
        msg << what << ": n=" << n
            << " is not even; V(I) and V(Y) are not orthogonal (tr Y != 0), so there is no "
               "complete transfer to certify";
        throw std::invalid_argument(msg.str());
    }
}

void require_normalized(const CVector& psi, const char* what) {
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << what << ": initial state is not normalized (norm " << norm << ")";
        throw std::invalid_argument(msg.str());
    }
}

CMatrix lab_hamiltonian(const SystemSpec& spec, const Tolerances& tol) {
    const RMatrix w = spec.frame ? *spec.frame : default_lab_frame(spec.n);
    return to_lab(build_h_tp(spec.n, spec.params), w, tol);
}

}  // namespace

CMatrix build_h_single(int n, double delta, double omega) {
    const SpinRep rep = spin_generators(n);
    return 2.0 * delta * rep.J3 + 2.0 * omega * rep.J1;
}

CMatrix build_h_tp(int n, const CouplingParams& p) {
    const CMatrix identity = CMatrix::Identity(n, n);
    return kron(build_h_single(n, p.delta1, p.omega1), identity) +
           kron(identity, build_h_single(n, p.delta2, p.omega2));
}

CMatrix to_lab(const CMatrix& h_tp, const RMatrix& w, const Tolerances& tol) {
    if (w.rows() != w.cols() || w.rows() != h_tp.rows() || h_tp.rows() != h_tp.cols()) {
        std::ostringstream msg;
        msg << "to_lab: frame " << w.rows() << "x" << w.cols() << " does not match Hamiltonian "
            << h_tp.rows() << "x" << h_tp.cols();
        throw std::invalid_argument(msg.str());
    }
    const double defect =
        (w.transpose() * w - RMatrix::Identity(w.rows(), w.cols())).cwiseAbs().maxCoeff();
    if (!(defect <= tol.unitary)) {
        std::ostringstream msg;
        msg << "to_lab: frame is not orthogonal (max |W^T W - I| = " << defect << ")";
        throw std::invalid_argument(msg.str());
    }
    const CMatrix wc = w.cast<Complex>();
    return wc * h_tp * wc.transpose();
}

CMatrix propagator(const CMatrix& h, double t, const Tolerances& tol) {
    return matexp_unitary(h, t, tol);
}

CMatrix tp_propagator(int n, const CouplingParams& p, double t, const Tolerances& tol) {
    return kron(matexp_unitary(build_h_single(n, p.delta1, p.omega1), t, tol),
                matexp_unitary(build_h_single(n, p.delta2, p.omega2), t, tol));
}

RMatrix default_lab_frame(int n) {
    require_even(n, "default_lab_frame");
    for (int depth = 1; depth <= 3; ++depth) {
        if (n == (1 << depth)) return build_w(depth).w;
    }
    return general_even_frame(n);
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t intervals) {
    if (intervals == 0) return {t0};
    std::vector<double> grid(intervals + 1);
    const double step = (t1 - t0) / static_cast<double>(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) grid[i] = t0 + step * static_cast<double>(i);
    grid.back() = t1;
    return grid;
}

SimulationResult simulate(const CMatrix& h, const CVector& psi0, std::span<const double> times,
                          const Tolerances& tol) {
    require_normalized(psi0, "simulate");
    const HermitianEvolution evolution(h, tol);
    if (psi0.size() != evolution.dim()) {
        throw std::invalid_argument("simulate: initial state length does not match Hamiltonian");
    }
    SimulationResult result;
    result.times.assign(times.begin(), times.end());
    result.populations.resize(static_cast<Index>(times.size()), evolution.dim());
    for (std::size_t r = 0; r < times.size(); ++r) {
        const CVector psi = evolution.evolve(psi0, times[r]);
        result.populations.row(static_cast<Index>(r)) = psi.cwiseAbs2().transpose();
    }
    result.labels.reserve(static_cast<std::size_t>(evolution.dim()));
    for (Index i = 0; i < evolution.dim(); ++i) result.labels.push_back("|" + std::to_string(i + 1) + ">");
    return result;
}

CptCertificate verify_cpt(const SystemSpec& spec, const Tolerances& tol) {
    require_even(spec.n, "verify_cpt");
    const int n = spec.n;
    const Index dim = static_cast<Index>(n) * n;
    const double tau = spec.params.tau;

    CptCertificate cert;
    cert.n = n;
    cert.tau = tau;
    cert.target_index = static_cast<std::size_t>(dim - n + 1);

    const CMatrix u_lab = propagator(lab_hamiltonian(spec, tol), tau, tol);
    const Complex amplitude = u_lab(dim - n, 0);
    cert.fidelity = std::norm(amplitude);
    cert.phase = std::arg(amplitude);

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const CVector start = vectorize(CMatrix(CMatrix::Identity(n, n))) * scale;
    const CVector goal = vectorize(y_matrix(spin_generators(n))) * scale;
    cert.tp_overlap = std::norm(goal.dot(tp_propagator(n, spec.params, tau, tol) * start));

    cert.pass = std::abs(1.0 - cert.fidelity) <= tol.cpt;
    return cert;
}

ForbiddenScanReport forbidden_scan(const SystemSpec& spec, std::span<const double> times,
                                   const Tolerances& tol) {
    if (spec.n != 2) {
        throw std::invalid_argument("forbidden_scan: defined for the 4-level system (n = 2), got n=" +
                                    std::to_string(spec.n));
    }
    const CVector start = CVector::Unit(4, 0);
    const SimulationResult sim = simulate(lab_hamiltonian(spec, tol), start, times, tol);
    ForbiddenScanReport report;
    report.samples = times.size();
    report.t_max = times.empty() ? 0.0 : times.back();
    if (!times.empty()) {
        report.max_population_e2 = sim.populations.col(1).maxCoeff();
        report.max_population_e4 = sim.populations.col(3).maxCoeff();
    }
    constexpr double kLimit = 1.0 - 1e-6;
    report.pass = report.max_population_e2 < kLimit && report.max_population_e4 < kLimit;
    return report;
}

CouplingGraph coupling_graph(const CMatrix& h_lab, double zero_tol, const Tolerances& tol) {
    require_hermitian(h_lab, tol, "coupling_graph");
    CouplingGraph graph;
    graph.size = h_lab.rows();
    graph.threshold = zero_tol * max_abs(h_lab);
    graph.diagonal = h_lab.diagonal().real();
    for (Index i = 0; i < h_lab.rows(); ++i) {
        for (Index j = i + 1; j < h_lab.cols(); ++j) {
            if (std::abs(h_lab(i, j)) > graph.threshold) graph.edges.push_back({i, j, h_lab(i, j)});
        }
    }
    return graph;
}

std::array<RMatrix, 4> lab_coupling_basis(int n, const RMatrix& w) {
    // Inverse of V12 = O1 + O2, V23 = D1 - D2, V34 = O2 - O1, V14 = D1 + D2.
    const std::array<CouplingParams, 4> unit{{
        {.delta1 = 0.0, .omega1 = 0.5, .delta2 = 0.0, .omega2 = 0.5},
        {.delta1 = 0.5, .omega1 = 0.0, .delta2 = -0.5, .omega2 = 0.0},
        {.delta1 = 0.0, .omega1 = -0.5, .delta2 = 0.0, .omega2 = 0.5},
        {.delta1 = 0.5, .omega1 = 0.0, .delta2 = 0.5, .omega2 = 0.0},
    }};
    std::array<RMatrix, 4> basis;
    for (std::size_t k = 0; k < unit.size(); ++k) {
        basis[k] = to_lab(build_h_tp(n, unit[k]), w).real();
    }
    return basis;
}

}  // namespace pcpt
