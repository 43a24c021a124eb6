#pragma once

#include <array>
#include <string_view>

#include "pcpt/matrix.hpp"
#include "pcpt/pythagorean.hpp"

// Printed 16-level reference tables (two spin-3/2 particles).
namespace pcpt::cli::reference {

using SymbolicMatrix = std::array<std::array<std::string_view, 16>, 16>;

// Entries of 2*W, in {0, +-1}.
const std::array<std::array<int, 16>, 16>& w16_numerators();

// Entries such as "3D1+D2", "r3O2", "-V14"; r3 stands for sqrt(3).
// Symbols: D1 D2 O1 O2 (detunings, Rabi) and V12 V23 V34 V14.
const SymbolicMatrix& h_tp_symbols();
const SymbolicMatrix& h_lab_symbols();

// Throws std::invalid_argument on malformed input.
double evaluate_symbol(std::string_view expr, const CouplingParams& params);
RMatrix evaluate(const SymbolicMatrix& table, const CouplingParams& params);

}  // namespace pcpt::cli::reference
