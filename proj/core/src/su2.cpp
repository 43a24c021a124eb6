#include "pcpt/su2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pcpt {

SpinRep spin_generators(int n) {
    if (n < 2) {
        throw std::invalid_argument("spin_generators: dimension must be >= 2, got " +
                                    std::to_string(n));
    }
    SpinRep rep;
    rep.n = n;
    rep.j = 0.5 * (n - 1);
    const double casimir = rep.j * (rep.j + 1.0);

    // raising(r-1, r) = sqrt(j(j+1) - m(m+1)) with m = j - r the J3 eigenvalue
    // of basis state r.
    RMatrix raising = RMatrix::Zero(n, n);
    RVector m(n);
    for (int r = 0; r < n; ++r) m(r) = rep.j - r;
    for (int r = 1; r < n; ++r) raising(r - 1, r) = std::sqrt(casimir - m(r) * (m(r) + 1.0));

    const RMatrix lowering = raising.transpose();
    rep.J1 = (0.5 * (raising + lowering)).cast<Complex>();
    rep.J2 = (raising - lowering).cast<Complex>() / (2.0 * kI);
    rep.J3 = m.asDiagonal().toDenseMatrix().cast<Complex>();
    return rep;
}

CMatrix y_matrix(const SpinRep& rep) {
    // exp(i pi J2) = exp(-i J2 t) at t = -pi.
    return matexp_unitary(rep.J2, -std::numbers::pi);
}

SigmaSet sigma_set() {
    SigmaSet s;
    s.m[0] << 1, 0, 0, 1;
    s.m[1] << 0, 1, 1, 0;
    s.m[2] << 0, 1, -1, 0;
    s.m[3] << 1, 0, 0, -1;
    return s;
}

}  // namespace pcpt
