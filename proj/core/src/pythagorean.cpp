#include "pcpt/pythagorean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pcpt {

OddPair::OddPair(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (q < 1 || p <= q || p % 2 == 0 || q % 2 == 0) {
        throw std::invalid_argument("OddPair: need odd p > q >= 1, got p=" + std::to_string(p) +
                                    ", q=" + std::to_string(q));
    }
}

bool OddPair::coprime() const noexcept { return std::gcd(p_, q_) == 1; }

PythTriple triple_from_pair(const OddPair& pair, Sign sign_a, Sign sign_b) {
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();
    PythTriple t;
    t.a = static_cast<double>(static_cast<int>(sign_a) * (p * p - q * q) / 2);
    t.b = static_cast<double>(static_cast<int>(sign_b) * p * q);
    t.c = static_cast<double>(pair.hypotenuse());
    t.primitive = pair.coprime();
    return t;
}

std::vector<OddPair> enumerate_primitive_pairs(double limit_c) {
    std::vector<OddPair> out;
    if (!(limit_c >= 5.0)) return out;
    // q >= 1 forces p^2 <= 2c - 1.
    for (std::int64_t p = 3; static_cast<double>(p * p) <= 2.0 * limit_c - 1.0; p += 2) {
        for (std::int64_t q = 1; q < p; q += 2) {
            if (static_cast<double>(p * p + q * q) / 2.0 > limit_c) break;
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    std::sort(out.begin(), out.end(), [](const OddPair& x, const OddPair& y) {
        if (x.hypotenuse() != y.hypotenuse()) return x.hypotenuse() < y.hypotenuse();
        return x.p() < y.p();
    });
    return out;
}

CouplingParams coupling_params(const PythTriple& t, double k) {
    if (!(t.c > 0.0)) {
        throw std::invalid_argument("coupling_params: hypotenuse must be positive, got " +
                                    std::to_string(t.c));
    }
    const double norm = 2.0 * std::sqrt(1.0 + k * k);
    CouplingParams out;
    out.delta1 = (k * (t.c - t.a) + t.b) / norm;
    out.omega1 = (t.c - t.a - k * t.b) / norm;
    out.delta2 = (k * (t.c + t.a) - t.b) / norm;
    out.omega2 = (t.c + t.a + k * t.b) / norm;
    out.k = k;
    out.tau = std::numbers::pi / std::sqrt(2.0 * t.c);
    return out;
}

CouplingParams coupling_params(const OddPair& pair, double k) {
    return coupling_params(triple_from_pair(pair), k);
}

LabCouplings lab_couplings(const CouplingParams& p) {
    return {p.omega1 + p.omega2, p.delta1 - p.delta2, -p.omega1 + p.omega2, p.delta1 + p.delta2};
}

}  // namespace pcpt
