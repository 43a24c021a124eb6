#pragma once

#include <cstdint>
#include <vector>

namespace pcpt {

// Odd integers p > q >= 1 generating the triple ((p^2-q^2)/2, pq, (p^2+q^2)/2).
class OddPair {
public:
    // Throws std::invalid_argument unless both are odd and p > q >= 1.
    OddPair(std::int64_t p, std::int64_t q);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    // (p^2 + q^2) / 2
    std::int64_t hypotenuse() const noexcept { return (p_ * p_ + q_ * q_) / 2; }
    bool coprime() const noexcept;

    friend bool operator==(const OddPair&, const OddPair&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

enum class Sign : int { plus = 1, minus = -1 };

struct PythTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    bool primitive = false;
};

PythTriple triple_from_pair(const OddPair& pair, Sign sign_a = Sign::plus,
                            Sign sign_b = Sign::plus);

// Coprime odd pairs with (p^2+q^2)/2 <= limit_c, ordered by c then p.
std::vector<OddPair> enumerate_primitive_pairs(double limit_c);

// Detunings and Rabi frequencies (angular units, hbar = 1) giving a complete
// transfer e1 -> e3 in the 4-level lab frame, and the transfer time tau.
struct CouplingParams {
    double delta1 = 0.0;
    double omega1 = 0.0;
    double delta2 = 0.0;
    double omega2 = 0.0;
    double k = 0.0;
    double tau = 0.0;

    // The two-spin model assumes all four rates nonzero; special k can zero one.
    bool all_nonzero() const noexcept {
        return delta1 != 0.0 && omega1 != 0.0 && delta2 != 0.0 && omega2 != 0.0;
    }
};

// Throws std::invalid_argument for c <= 0.
CouplingParams coupling_params(const PythTriple& triple, double k = 0.0);
CouplingParams coupling_params(const OddPair& pair, double k = 0.0);

// Nearest-neighbour couplings of the 4-level lab Hamiltonian.
struct LabCouplings {
    double v12 = 0.0;
    double v23 = 0.0;
    double v34 = 0.0;
    double v14 = 0.0;
};

LabCouplings lab_couplings(const CouplingParams& params);

}  // namespace pcpt
