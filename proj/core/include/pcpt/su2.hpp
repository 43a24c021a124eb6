#pragma once

#include <array>

#include "pcpt/matrix.hpp"

namespace pcpt {

// Irreducible spin-(n-1)/2 representation of su(2). Basis states are ordered
// by descending J3 eigenvalue: j, j-1, ..., -j.
struct SpinRep {
    int n = 0;
    double j = 0.0;
    CMatrix J1;  // real symmetric
    CMatrix J2;  // purely imaginary
    CMatrix J3;  // real diagonal
};

// Throws std::invalid_argument for n < 2.
SpinRep spin_generators(int n);

// exp(i pi J2). For even n: alternating +1/-1 on the anti-diagonal starting
// with +1 in the top-right corner; for odd n the central entry is (-1)^j.
CMatrix y_matrix(const SpinRep& rep);

// The 2x2 set {I, sigma_1, i sigma_2, sigma_3}; every entry is 0 or +-1.
struct SigmaSet {
    std::array<Eigen::Matrix2d, 4> m;
    const Eigen::Matrix2d& operator[](std::size_t k) const { return m.at(k); }
};

SigmaSet sigma_set();

}  // namespace pcpt
