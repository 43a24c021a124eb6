#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pcpt_cli/reference_data.hpp"

namespace pcpt::cli::reference {

namespace {

double symbol_value(std::string_view name, const CouplingParams& p, const LabCouplings& v) {
    if (name == "D1") return p.delta1;
    if (name == "D2") return p.delta2;
    if (name == "O1") return p.omega1;
    if (name == "O2") return p.omega2;
    if (name == "V12") return v.v12;
    if (name == "V23") return v.v23;
    if (name == "V34") return v.v34;
    if (name == "V14") return v.v14;
    throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
}

}  // namespace

double evaluate_symbol(std::string_view expr, const CouplingParams& params) {
    const LabCouplings v = lab_couplings(params);
    if (expr.empty()) throw std::invalid_argument("empty expression");
    double total = 0.0;
    std::size_t pos = 0;
    while (pos < expr.size()) {
        double sign = 1.0;
        if (expr[pos] == '+' || expr[pos] == '-') {
            sign = expr[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("expected sign in '" + std::string(expr) + "'");
        }
        double coef = 1.0;
        const std::size_t digits = pos;
        while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
        if (pos > digits) coef = std::stod(std::string(expr.substr(digits, pos - digits)));
        if (expr.substr(pos, 2) == "r3") {
            coef *= std::sqrt(3.0);
            pos += 2;
        }
        const std::size_t name = pos;
        if (pos < expr.size() && std::isalpha(static_cast<unsigned char>(expr[pos]))) {
            ++pos;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
            total += sign * coef * symbol_value(expr.substr(name, pos - name), params, v);
        } else if (pos > digits) {
            total += sign * coef;
        } else {
            throw std::invalid_argument("malformed term in '" + std::string(expr) + "'");
        }
    }
    return total;
}

RMatrix evaluate(const SymbolicMatrix& table, const CouplingParams& params) {
    RMatrix out(16, 16);
    for (Index r = 0; r < 16; ++r) {
        for (Index c = 0; c < 16; ++c) {
            out(r, c) = evaluate_symbol(table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], params);
        }
    }
    return out;
}

}  // namespace pcpt::cli::reference
