#pragma once

// Maximally entangled lab-frame bases. A frame of depth N acts on n^2 levels
// with n = 2^N; each of its columns is a tensor product of N matrices from
// {I, sigma_1, i sigma_2, sigma_3}, flattened row by row and scaled to unit
// norm.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcpt/matrix.hpp"

namespace pcpt {

// Digit string over {0,1,2,3}; "0031" names I (x) I (x) sigma_3 (x) sigma_1.
class SigmaLabel {
public:
    // Throws std::invalid_argument on an empty string or a digit outside 0-3.
    explicit SigmaLabel(std::string digits);

    const std::string& digits() const noexcept { return digits_; }
    int depth() const noexcept { return static_cast<int>(digits_.size()); }

    friend bool operator==(const SigmaLabel&, const SigmaLabel&) = default;
    friend auto operator<=>(const SigmaLabel&, const SigmaLabel&) = default;

private:
    std::string digits_;
};

// The 2^N x 2^N product of the labelled Sigma matrices.
RMatrix label_matrix(const SigmaLabel& label);

// vectorize(label_matrix(label)^T) / sqrt(2^N): the product flattened row by
// row. This is the stacking under which the printed frames are symmetric.
RVector label_to_column(const SigmaLabel& label);

struct EntangledFrame {
    int depth = 0;  // N
    int n = 0;      // 2^N, the local dimension
    int dim = 0;    // n^2
    std::vector<SigmaLabel> labels;
    RMatrix w;
    bool experimental = false;  // true for orderings found by search_w
};

// Assembles W column by column from a complete label ordering.
EntangledFrame frame_from_labels(const std::vector<SigmaLabel>& labels);

// Canonical orderings for N = 1, 2, 3. Other depths are delegated to
// search_w with default_search_budget; a failed search throws
// std::runtime_error and N < 1 throws std::invalid_argument.
EntangledFrame build_w(int depth);

// The printed canonical label sequence for N in {1, 2, 3}.
std::vector<SigmaLabel> canonical_labels(int depth);

struct FrameValidation {
    bool nonnegative_leading_columns = false;  // (a) first n columns >= 0
    bool diagonal_signs = false;               // (b) + on first half, - on second half
    bool alternating_last_column = false;      // (c) last column +-2^{-N/2} alternating, zeros
    bool quantized_entries = false;            // entries in {0, +-2^{-N/2}}
    double symmetry_residual = 0.0;            // max |W - W^T|
    double orthogonality_residual = 0.0;       // max |W^T W - I|

    bool demands_met() const noexcept {
        return nonnegative_leading_columns && diagonal_signs && alternating_last_column;
    }
    bool passed(double tol = 1e-12) const noexcept {
        return demands_met() && quantized_entries && symmetry_residual <= tol &&
               orthogonality_residual <= tol;
    }
};

FrameValidation validate_frame(const EntangledFrame& frame);

inline constexpr std::uint64_t default_search_budget = 5'000'000;

struct FrameSearchOutcome {
    enum class Status { found, budget_exhausted, infeasible };
    Status status = Status::infeasible;
    std::optional<EntangledFrame> frame;
    std::uint64_t nodes = 0;  // label placements tried
    int deepest = 0;          // most columns placed simultaneously
};

const char* to_string(FrameSearchOutcome::Status status);

// Depth-first search over label orderings, candidates in lexicographic
// order, for a symmetric W meeting demands (a)-(c). Depth 1 is delegated to
// build_w. Deterministic for a given (depth, budget).
FrameSearchOutcome search_w(int depth, std::uint64_t budget = default_search_budget);

// An n^2 x n^2 orthogonal matrix whose row 1 is V(I_n)/sqrt(n) and row
// n^2 - n + 1 is V(Y_n)/sqrt(n), completed by complete_orthogonal. Odd n is
// rejected: tr Y_n != 0, so the two rows are not orthogonal.
RMatrix general_even_frame(int n);

// Von Neumann entropy of the n x n bipartition of a normalized n^2 vector.
// Throws std::invalid_argument for a wrong length or a norm off by > 1e-10.
double entanglement_entropy(const CVector& column, int n);

}  // namespace pcpt
