#include "pcpt/matrix.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcpt {

CVector vectorize(const CMatrix& x) {
    CVector out(x.size());
    for (Index j = 0; j < x.cols(); ++j) {
        for (Index i = 0; i < x.rows(); ++i) out(i + x.rows() * j) = x(i, j);
    }
    return out;
}

RVector vectorize(const RMatrix& x) {
    RVector out(x.size());
    for (Index j = 0; j < x.cols(); ++j) {
        for (Index i = 0; i < x.rows(); ++i) out(i + x.rows() * j) = x(i, j);
    }
    return out;
}

CMatrix unvectorize(const CVector& y, Index rows, Index cols) {
    if (rows <= 0 || cols <= 0 || y.size() != rows * cols) {
        std::ostringstream msg;
        msg << "unvectorize: vector of length " << y.size() << " cannot fill a " << rows << "x"
            << cols << " matrix";
        throw std::invalid_argument(msg.str());
    }
    CMatrix out(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) out(i, j) = y(i + rows * j);
    }
    return out;
}

double hermiticity_defect(const CMatrix& h) {
    if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (Index j = 0; j < h.cols(); ++j) {
        for (Index i = 0; i <= j; ++i) {
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
        }
    }
    return worst;
}

double unitarity_defect(const CMatrix& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    const CMatrix gram = u.adjoint() * u;
    return (gram - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_hermitian(const CMatrix& h, const Tolerances& tol, const char* what) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        std::ostringstream msg;
        msg << what << ": generator must be square and non-empty, got " << h.rows() << "x"
            << h.cols();
        throw std::invalid_argument(msg.str());
    }
    const double defect = hermiticity_defect(h);
    const double allowed = tol.hermitian * std::max(1.0, max_abs(h));
    if (!(defect <= allowed)) {
        std::ostringstream msg;
        msg << what << ": generator is not Hermitian (max |h - h^dagger| = " << defect
            << ", allowed " << allowed << ")";
        throw std::invalid_argument(msg.str());
    }
}

HermitianEvolution::HermitianEvolution(const CMatrix& h, const Tolerances& tol) {
    require_hermitian(h, tol, "HermitianEvolution");
    const CMatrix symmetric = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetric);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("HermitianEvolution: eigendecomposition failed");
    }
    energies_ = solver.eigenvalues();
    basis_ = solver.eigenvectors();
}

CMatrix HermitianEvolution::unitary(double t) const {
    CVector phases(energies_.size());
    for (Index k = 0; k < energies_.size(); ++k) phases(k) = std::exp(-kI * (energies_(k) * t));
    return basis_ * phases.asDiagonal() * basis_.adjoint();
}

CVector HermitianEvolution::evolve(const CVector& psi, double t) const {
    if (psi.size() != dim()) {
        std::ostringstream msg;
        msg << "HermitianEvolution::evolve: state of length " << psi.size()
            << " for a generator of dimension " << dim();
        throw std::invalid_argument(msg.str());
    }
    CVector coeffs = basis_.adjoint() * psi;
    for (Index k = 0; k < coeffs.size(); ++k) coeffs(k) *= std::exp(-kI * (energies_(k) * t));
    return basis_ * coeffs;
}

CMatrix matexp_unitary(const CMatrix& h, double t, const Tolerances& tol) {
    const HermitianEvolution evolution(h, tol);
    CMatrix u = evolution.unitary(t);
    const double defect = unitarity_defect(u);
    if (!(defect <= tol.unitary)) {
        std::ostringstream msg;
        msg << "matexp_unitary: propagator lost unitarity (defect " << defect << ")";
        throw std::runtime_error(msg.str());
    }
    return u;
}

RMatrix complete_orthogonal(std::span<const RVector> rows, double orthonormal_tol) {
    if (rows.empty()) {
        throw std::invalid_argument("complete_orthogonal: at least one seed row is required");
    }
    const Index dim = rows.front().size();
    if (dim == 0 || static_cast<Index>(rows.size()) > dim) {
        throw std::invalid_argument("complete_orthogonal: too many seed rows for the dimension");
    }
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (rows[a].size() != dim) {
            throw std::invalid_argument("complete_orthogonal: seed rows differ in length");
        }
        for (std::size_t b = 0; b <= a; ++b) {
            const double expected = a == b ? 1.0 : 0.0;
            const double got = rows[a].dot(rows[b]);
            if (std::abs(got - expected) > orthonormal_tol) {
                std::ostringstream msg;
                msg << "complete_orthogonal: seed rows are not orthonormal (<r" << a << ", r"
                    << b << "> = " << got << ")";
                throw std::invalid_argument(msg.str());
            }
        }
    }

    RMatrix out(dim, dim);
    Index filled = 0;
    for (const RVector& r : rows) out.row(filled++) = r.transpose();

    constexpr double kSkipNorm = 1e-8;
    constexpr double kZeroEntry = 1e-12;
    for (Index k = 0; k < dim && filled < dim; ++k) {
        RVector v = RVector::Unit(dim, k);
        // Two passes of modified Gram-Schmidt keep the completion orthogonal to
        // working precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (Index r = 0; r < filled; ++r) {
                const auto row = out.row(r);
                v -= row.dot(v.transpose()) * row.transpose();
            }
        }
        const double norm = v.norm();
        if (norm < kSkipNorm) continue;
        v /= norm;
        for (Index i = 0; i < dim; ++i) {
            if (std::abs(v(i)) > kZeroEntry) {
                if (v(i) < 0.0) v = -v;
                break;
            }
        }
        out.row(filled++) = v.transpose();
    }
    if (filled != dim) {
        throw std::runtime_error("complete_orthogonal: completion ran out of basis vectors");
    }
    return out;
}

}  // namespace pcpt

namespace pcpt {

PhaseMatch match_up_to_phase(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("match_up_to_phase: shape mismatch");
    }
    PhaseMatch out;
    const Complex projection = (b.adjoint() * a).trace();
    if (std::abs(projection) > 0.0) out.phase = projection / std::abs(projection);
    out.residual = a.size() == 0 ? 0.0 : (a - out.phase * b).cwiseAbs().maxCoeff();
    out.holds = out.residual <= tol;
    return out;
}

}  // namespace pcpt
