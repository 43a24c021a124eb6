#include "pcpt_cli/reference_data.hpp"

namespace pcpt::cli::reference {

const std::array<std::array<int, 16>, 16>& w16_numerators() {
    static const std::array<std::array<int, 16>, 16> data{{
    { 1,  0,  0,  0,  0,  1,  0,  0,  0,  0,  1,  0,  0,  0,  0,  1},
    { 0,  1,  0,  0,  1,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  0},
    { 0,  0,  1,  0,  0,  0,  0,  1,  1,  0,  0,  0,  0,  1,  0,  0},
    { 0,  0,  0,  1,  0,  0,  1,  0,  0,  1,  0,  0,  1,  0,  0,  0},
    { 0,  1,  0,  0,  1,  0,  0,  0,  0,  0,  0, -1,  0,  0, -1,  0},
    { 1,  0,  0,  0,  0,  1,  0,  0,  0,  0, -1,  0,  0,  0,  0, -1},
    { 0,  0,  0,  1,  0,  0,  1,  0,  0, -1,  0,  0, -1,  0,  0,  0},
    { 0,  0,  1,  0,  0,  0,  0,  1, -1,  0,  0,  0,  0, -1,  0,  0},
    { 0,  0,  1,  0,  0,  0,  0, -1, -1,  0,  0,  0,  0,  1,  0,  0},
    { 0,  0,  0,  1,  0,  0, -1,  0,  0, -1,  0,  0,  1,  0,  0,  0},
    { 1,  0,  0,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  1},
    { 0,  1,  0,  0, -1,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  0},
    { 0,  0,  0,  1,  0,  0, -1,  0,  0,  1,  0,  0, -1,  0,  0,  0},
    { 0,  0,  1,  0,  0,  0,  0, -1,  1,  0,  0,  0,  0, -1,  0,  0},
    { 0,  1,  0,  0, -1,  0,  0,  0,  0,  0,  0,  1,  0,  0, -1,  0},
    { 1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0,  0,  0, -1}}};
    return data;
}

const SymbolicMatrix& h_tp_symbols() {
    static const SymbolicMatrix data{{
    {"3V14", "r3O2", "0", "0", "r3O1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"r3O2", "3D1+D2", "2O2", "0", "0", "r3O1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "2O2", "3D1-D2", "r3O2", "0", "0", "r3O1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "r3O2", "3V23", "0", "0", "0", "r3O1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"r3O1", "0", "0", "0", "D1+3D2", "r3O2", "0", "0", "2O1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "r3O1", "0", "0", "r3O2", "V14", "2O2", "0", "0", "2O1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "r3O1", "0", "0", "2O2", "V23", "r3O2", "0", "0", "2O1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "r3O1", "0", "0", "r3O2", "D1-3D2", "0", "0", "0", "2O1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "2O1", "0", "0", "0", "3D2-D1", "r3O2", "0", "0", "r3O1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "2O1", "0", "0", "r3O2", "-V23", "2O2", "0", "0", "r3O1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "2O1", "0", "0", "2O2", "-V14", "r3O2", "0", "0", "r3O1", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "2O1", "0", "0", "r3O2", "-D1-3D2", "0", "0", "0", "r3O1"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "r3O1", "0", "0", "0", "-3V23", "r3O2", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "r3O1", "0", "0", "r3O2", "D2-3D1", "2O2", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "r3O1", "0", "0", "2O2", "-3D1-D2", "r3O2"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "r3O1", "0", "0", "r3O2", "-3V14"}}};
    return data;
}

const SymbolicMatrix& h_lab_symbols() {
    static const SymbolicMatrix data{{
    {"0", "r3V12", "0", "V12", "0", "2V14", "0", "0", "0", "-V12", "0", "0", "0", "0", "0", "V14"},
    {"r3V12", "0", "V12", "0", "2V14", "0", "0", "0", "V34", "0", "0", "0", "0", "0", "V23", "0"},
    {"0", "V12", "0", "r3V12", "0", "0", "0", "2V23", "0", "0", "0", "V34", "0", "V14", "0", "0"},
    {"V12", "0", "r3V12", "0", "0", "0", "2V23", "0", "0", "0", "-V12", "0", "V23", "0", "0", "0"},
    {"0", "2V14", "0", "0", "0", "r3V12", "0", "V34", "0", "0", "0", "V23", "0", "V12", "0", "0"},
    {"2V14", "0", "0", "0", "r3V12", "0", "V34", "0", "0", "0", "V14", "0", "-V34", "0", "0", "0"},
    {"0", "0", "0", "2V23", "0", "V34", "0", "r3V12", "0", "V23", "0", "0", "0", "0", "0", "-V34"},
    {"0", "0", "2V23", "0", "V34", "0", "r3V12", "0", "V14", "0", "0", "0", "0", "0", "V12", "0"},
    {"0", "V34", "0", "0", "0", "0", "0", "V14", "0", "r3V34", "0", "V12", "0", "2V23", "0", "0"},
    {"-V12", "0", "0", "0", "0", "0", "V23", "0", "r3V34", "0", "V12", "0", "2V23", "0", "0", "0"},
    {"0", "0", "0", "-V12", "0", "V14", "0", "0", "0", "V12", "0", "r3V34", "0", "0", "0", "2V14"},
    {"0", "0", "V34", "0", "V23", "0", "0", "0", "V12", "0", "r3V34", "0", "0", "0", "2V14", "0"},
    {"0", "0", "0", "V23", "0", "-V34", "0", "0", "0", "2V23", "0", "0", "0", "r3V34", "0", "V34"},
    {"0", "0", "V14", "0", "V12", "0", "0", "0", "2V23", "0", "0", "0", "r3V34", "0", "V34", "0"},
    {"0", "V23", "0", "0", "0", "0", "0", "V12", "0", "0", "0", "2V14", "0", "V34", "0", "r3V34"},
    {"V14", "0", "0", "0", "0", "0", "-V34", "0", "0", "0", "2V14", "0", "V34", "0", "r3V34", "0"}}};
    return data;
}

}  // namespace pcpt::cli::reference
