#pragma once

namespace pcpt {

// Numeric thresholds shared by every module. Defaults match the library's
// documented contracts; the CLI and the environment may override them.
struct Tolerances {
    double hermitian = 1e-12;  // max |h - h^dagger|, scaled by max(1, max|h|)
    double unitary = 1e-10;    // max |u^dagger u - I|
    double cpt = 1e-9;         // |1 - fidelity| threshold for a certified transfer

    // Reads PCPT_HERMITIAN_TOL, PCPT_UNITARY_TOL and PCPT_CPT_TOL. Unset
    // variables keep the defaults; malformed or non-positive values throw
    // std::invalid_argument naming the variable.
    static Tolerances from_environment();
};

}  // namespace pcpt
