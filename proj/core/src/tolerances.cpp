#include "pcpt/tolerances.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pcpt {

namespace {

void override_from(const char* name, double& slot) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(raw, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + ": not a number: '" + raw + "'");
    }
    if (used != std::string(raw).size() || !std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument(std::string(name) + ": expected a positive number, got '" +
                                    raw + "'");
    }
    slot = value;
}

}  // namespace

Tolerances Tolerances::from_environment() {
    Tolerances tol;
    override_from("PCPT_HERMITIAN_TOL", tol.hermitian);
    override_from("PCPT_UNITARY_TOL", tol.unitary);
    override_from("PCPT_CPT_TOL", tol.cpt);
    return tol;
}

}  // namespace pcpt
