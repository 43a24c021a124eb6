#pragma once

// Two-spin Hamiltonians in the tensor-product (TP) frame, their lab-frame
// images, propagation and transfer certification.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcpt/matrix.hpp"
#include "pcpt/pythagorean.hpp"

namespace pcpt {

// 2*delta*J3 + 2*omega*J1 in the n-dimensional representation; for n = 2
// this is delta*sigma_z + omega*sigma_x.
CMatrix build_h_single(int n, double delta, double omega);

// h1 (x) I + I (x) h2 with h1 from (delta1, omega1) and h2 from (delta2, omega2).
CMatrix build_h_tp(int n, const CouplingParams& params);

// w * h * w^T. Rejects w that is not orthogonal within tol.unitary. For the
// symmetric entangled frames this is the same as w * h * w.
CMatrix to_lab(const CMatrix& h_tp, const RMatrix& w, const Tolerances& tol = {});

CMatrix propagator(const CMatrix& h, double t, const Tolerances& tol = {});

// kron(exp(-i h1 t), exp(-i h2 t)): the factored TP-frame propagator.
CMatrix tp_propagator(int n, const CouplingParams& params, double t, const Tolerances& tol = {});

// Lab transform used when none is supplied: the canonical entangled frame
// for n in {2, 4, 8}, general_even_frame(n) for other even n.
RMatrix default_lab_frame(int n);

enum class TimeUnit { absolute, tau };

struct SimulationResult {
    std::vector<double> times;
    TimeUnit unit = TimeUnit::absolute;
    RMatrix populations;  // one row per time, one column per basis state
    std::vector<std::string> labels;
};

// intervals + 1 evenly spaced points, both endpoints included.
std::vector<double> uniform_grid(double t0, double t1, std::size_t intervals);

// |<e_i| exp(-i h t) |psi0>|^2 on the grid. psi0 must be normalized within 1e-10.
SimulationResult simulate(const CMatrix& h, const CVector& psi0, std::span<const double> times,
                          const Tolerances& tol = {});

struct SystemSpec {
    int n = 2;
    CouplingParams params;
    std::optional<RMatrix> frame;  // lab transform; default_lab_frame(n) when empty
};

struct CptCertificate {
    int n = 0;
    std::size_t target_index = 0;  // 1-based, n^2 - n + 1
    double tau = 0.0;
    double fidelity = 0.0;    // |<e_target| U_lab(tau) |e_1>|^2
    double tp_overlap = 0.0;  // |<V(Y)/sqrt(n)| U_TP(tau) |V(I)/sqrt(n)>|^2
    double phase = 0.0;       // arg <e_target| U_lab(tau) |e_1>
    bool pass = false;        // 1 - fidelity <= tol.cpt
};

// Odd n is rejected: V(I) and V(Y) overlap, so no transfer is possible.
CptCertificate verify_cpt(const SystemSpec& spec, const Tolerances& tol = {});

struct ForbiddenScanReport {
    double max_population_e2 = 0.0;
    double max_population_e4 = 0.0;
    std::size_t samples = 0;
    double t_max = 0.0;
    bool pass = false;  // both maxima strictly below 1 - 1e-6
};

// Starting from e_1 in the 4-level lab frame, the largest populations of
// e_2 and e_4 reached on the grid. Requires spec.n == 2.
ForbiddenScanReport forbidden_scan(const SystemSpec& spec, std::span<const double> times,
                                   const Tolerances& tol = {});

struct CouplingEdge {
    Index from = 0;  // 0-based, from < to
    Index to = 0;
    Complex weight;
};

struct CouplingGraph {
    Index size = 0;
    std::vector<CouplingEdge> edges;
    RVector diagonal;
    double threshold = 0.0;  // absolute cut: zero_tol * max|h|
};

// Undirected couplings |h(i,j)| > zero_tol * max|h| with i < j.
CouplingGraph coupling_graph(const CMatrix& h_lab, double zero_tol = 1e-10,
                             const Tolerances& tol = {});

// Lab Hamiltonians for unit V12, V23, V34, V14 (others zero). The lab
// Hamiltonian is linear in these four couplings, so each entry is a fixed
// combination of them.
std::array<RMatrix, 4> lab_coupling_basis(int n, const RMatrix& w);

}  // namespace pcpt
