#pragma once

// Dense complex linear algebra used throughout pcpt: Kronecker products,
// column-stacking vectorization, exact propagators of Hermitian generators
// and deterministic orthogonal completion.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "pcpt/tolerances.hpp"

namespace pcpt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <typename Derived1, typename Derived2>
auto kron(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
    using Scalar = typename Eigen::ScalarBinaryOpTraits<typename Derived1::Scalar,
                                                         typename Derived2::Scalar>::ReturnType;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                              a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                (a(i, j) * b.template cast<Scalar>()).eval();
        }
    }
    return out;
}

// Stacks the columns of x one after the other: component i + rows*j is x(i, j).
CVector vectorize(const CMatrix& x);
RVector vectorize(const RMatrix& x);

// Inverse of vectorize. Throws std::invalid_argument when y.size() != rows*cols.
CMatrix unvectorize(const CVector& y, Index rows, Index cols);

// max |h(i,j) - conj(h(j,i))|; infinity for non-square input.
double hermiticity_defect(const CMatrix& h);
// max |(u^dagger u - I)(i,j)|; infinity for non-square input.
double unitarity_defect(const CMatrix& u);
double max_abs(const CMatrix& m);

// Throws std::invalid_argument unless h is square and Hermitian within
// tol.hermitian * max(1, max|h|). `what` prefixes the message.
void require_hermitian(const CMatrix& h, const Tolerances& tol, const char* what);

// Spectral decomposition of a Hermitian generator, reusable for many times t.
class HermitianEvolution {
public:
    explicit HermitianEvolution(const CMatrix& h, const Tolerances& tol = {});

    // exp(-i h t)
    CMatrix unitary(double t) const;
    // exp(-i h t) psi, without forming the full unitary.
    CVector evolve(const CVector& psi, double t) const;

    const RVector& energies() const noexcept { return energies_; }
    const CMatrix& eigenvectors() const noexcept { return basis_; }
    Index dim() const noexcept { return basis_.rows(); }

private:
    RVector energies_;
    CMatrix basis_;
};

// exp(-i h t) by Hermitian eigendecomposition. Rejects non-Hermitian h with
// the measured deviation in the message; the result is checked unitary
// within tol.unitary.
CMatrix matexp_unitary(const CMatrix& h, double t, const Tolerances& tol = {});

// Extends real orthonormal rows to a full orthogonal matrix. The given rows
// come first; the rest follow from Gram-Schmidt over e_1, e_2, ... in index
// order, skipping residuals with norm below 1e-8, each completed row signed so
// its first nonzero entry is positive.
RMatrix complete_orthogonal(std::span<const RVector> rows, double orthonormal_tol = 1e-10);

// Best unit-modulus phase with a ~= phase * b (Frobenius projection) and the
// remaining max-entry residual. `holds` compares the residual against tol.
struct PhaseMatch {
    Complex phase{1.0, 0.0};
    double residual = 0.0;
    bool holds = false;
};

PhaseMatch match_up_to_phase(const CMatrix& a, const CMatrix& b, double tol);

}  // namespace pcpt
