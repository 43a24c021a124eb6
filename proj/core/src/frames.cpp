#include "pcpt/frames.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pcpt/su2.hpp"

namespace pcpt {

namespace {

std::vector<SigmaLabel> to_labels(std::initializer_list<const char*> raw) {
    std::vector<SigmaLabel> out;
    out.reserve(raw.size());
    for (const char* s : raw) out.emplace_back(s);
    return out;
}

constexpr double kEntryTol = 1e-12;

}  // namespace

SigmaLabel::SigmaLabel(std::string digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("SigmaLabel: empty label");
    for (char d : digits_) {
        if (d < '0' || d > '3') {
            throw std::invalid_argument("SigmaLabel: invalid digit '" + std::string(1, d) +
                                        "' in \"" + digits_ + "\"");
        }
    }
}

RMatrix label_matrix(const SigmaLabel& label) {
    const SigmaSet sigma = sigma_set();
    RMatrix out = RMatrix::Identity(1, 1);
    for (char d : label.digits()) {
        const RMatrix next = kron(out, RMatrix(sigma[static_cast<std::size_t>(d - '0')]));
        out = next;
    }
    return out;
}

RVector label_to_column(const SigmaLabel& label) {
    const RMatrix product = label_matrix(label);
    return vectorize(RMatrix(product.transpose())) / std::sqrt(static_cast<double>(product.rows()));
}

EntangledFrame frame_from_labels(const std::vector<SigmaLabel>& labels) {
    if (labels.empty()) throw std::invalid_argument("frame_from_labels: no labels");
    const int depth = labels.front().depth();
    const int n = 1 << depth;
    const int dim = n * n;
    if (static_cast<int>(labels.size()) != dim) {
        std::ostringstream msg;
        msg << "frame_from_labels: depth " << depth << " needs " << dim << " labels, got "
            << labels.size();
        throw std::invalid_argument(msg.str());
    }
    EntangledFrame frame;
    frame.depth = depth;
    frame.n = n;
    frame.dim = dim;
    frame.labels = labels;
    frame.w.resize(dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (labels[static_cast<std::size_t>(j)].depth() != depth) {
            throw std::invalid_argument("frame_from_labels: labels of mixed depth");
        }
        frame.w.col(j) = label_to_column(labels[static_cast<std::size_t>(j)]);
    }
    return frame;
}

std::vector<SigmaLabel> canonical_labels(int depth) {
    switch (depth) {
        case 1:
            return to_labels({"0", "1", "2", "3"});
        case 2:
            return to_labels({"00", "01", "10", "11", "31", "30", "21", "20",
                              "23", "22", "33", "32", "12", "13", "02", "03"});
        case 3:
            return to_labels({
                "000", "001", "010", "011", "100", "101", "110", "111",
                "031", "030", "021", "020", "131", "130", "121", "120",
                "313", "312", "303", "302", "213", "212", "203", "202",
                "322", "323", "332", "333", "222", "223", "232", "233",
                "230", "231", "220", "221", "330", "331", "320", "321",
                "201", "200", "211", "210", "301", "300", "311", "310",
                "123", "122", "133", "132", "023", "022", "033", "032",
                "112", "113", "102", "103", "012", "013", "002", "003",
            });
        default:
            throw std::invalid_argument("canonical_labels: no printed ordering for depth " +
                                        std::to_string(depth));
    }
}

EntangledFrame build_w(int depth) {
    if (depth < 1) {
        throw std::invalid_argument("build_w: depth must be >= 1, got " + std::to_string(depth));
    }
    if (depth <= 3) return frame_from_labels(canonical_labels(depth));

    FrameSearchOutcome outcome = search_w(depth, default_search_budget);
    if (!outcome.frame) {
        std::ostringstream msg;
        msg << "build_w: search for depth " << depth << " ended "
            << to_string(outcome.status) << " after " << outcome.nodes << " nodes (deepest "
            << outcome.deepest << " columns)";
        throw std::runtime_error(msg.str());
    }
    return *std::move(outcome.frame);
}

FrameValidation validate_frame(const EntangledFrame& frame) {
    FrameValidation report;
    const RMatrix& w = frame.w;
    const Index dim = w.rows();
    if (dim == 0 || w.cols() != dim || frame.n * frame.n != dim) {
        report.symmetry_residual = report.orthogonality_residual =
            std::numeric_limits<double>::infinity();
        return report;
    }
    const double unit = 1.0 / std::sqrt(static_cast<double>(frame.n));

    report.symmetry_residual = (w - w.transpose()).cwiseAbs().maxCoeff();
    report.orthogonality_residual =
        (w.transpose() * w - RMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();

    report.quantized_entries = true;
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            const double x = std::abs(w(i, j));
            if (x > kEntryTol && std::abs(x - unit) > kEntryTol) report.quantized_entries = false;
        }
    }

    report.nonnegative_leading_columns = (w.leftCols(frame.n).array() >= -kEntryTol).all();

    report.diagonal_signs = true;
    for (Index i = 0; i < dim; ++i) {
        const double d = w(i, i);
        const bool ok = i < dim / 2 ? d > kEntryTol : d < -kEntryTol;
        if (!ok) report.diagonal_signs = false;
    }

    report.alternating_last_column = true;
    int previous = 0;
    for (Index i = 0; i < dim; ++i) {
        const double x = w(i, dim - 1);
        if (std::abs(x) <= kEntryTol) continue;
        const int sign = x > 0 ? 1 : -1;
        if (std::abs(std::abs(x) - unit) > kEntryTol || sign == previous) {
            report.alternating_last_column = false;
        }
        previous = sign;
    }
    if (previous == 0) report.alternating_last_column = false;
    return report;
}

RMatrix general_even_frame(int n) {
    if (n < 2) throw std::invalid_argument("general_even_frame: n must be >= 2");
    const SpinRep rep = spin_generators(n);
    const CMatrix y = y_matrix(rep);
    if (n % 2 != 0) {
        std::ostringstream msg;
        msg << "general_even_frame: n=" << n << " is odd; tr Y = " << y.trace().real()
            << " != 0, so V(I) and V(Y) are not orthogonal and no transfer frame exists";
        throw std::invalid_argument(msg.str());
    }
    if (y.imag().cwiseAbs().maxCoeff() > 1e-10) {
        throw std::runtime_error("general_even_frame: Y has a non-negligible imaginary part");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const RVector identity_row = vectorize(RMatrix(RMatrix::Identity(n, n))) * scale;
    const RVector y_row = vectorize(RMatrix(y.real())) * scale;
    const std::vector<RVector> seeds{identity_row, y_row};
    const RMatrix completed = complete_orthogonal(seeds);

    const Index dim = static_cast<Index>(n) * n;
    const Index target = dim - n;  // 0-based row of e_{n^2-n+1}
    RMatrix out(dim, dim);
    out.row(0) = completed.row(0);
    out.row(target) = completed.row(1);
    Index next = 2;
    for (Index r = 1; r < dim; ++r) {
        if (r == target) continue;
        out.row(r) = completed.row(next++);
    }
    return out;
}

double entanglement_entropy(const CVector& column, int n) {
    if (n < 1 || column.size() != static_cast<Index>(n) * n) {
        std::ostringstream msg;
        msg << "entanglement_entropy: vector of length " << column.size()
            << " is not an n^2 = " << n * n << " state";
        throw std::invalid_argument(msg.str());
    }
    const double norm = column.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("entanglement_entropy: state is not normalized (norm " +
                                    std::to_string(norm) + ")");
    }
    const CMatrix m = unvectorize(column, n, n);
    const CMatrix reduced = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(reduced, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const double lambda = solver.eigenvalues()(k);
        if (lambda > 0.0) entropy -= lambda * std::log(lambda);
    }
    return entropy;
}

}  // namespace pcpt
