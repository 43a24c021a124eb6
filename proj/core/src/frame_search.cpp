#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcpt/frames.hpp"

namespace pcpt {

namespace {

constexpr int kMaxSearchDepth = 6;  // 4096 levels

class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    LabelSet& operator&=(const LabelSet& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }
    friend bool operator==(const LabelSet&, const LabelSet&) = default;

    // True when some member is not in `excluded`.
    bool any_outside(const LabelSet& excluded) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & ~excluded.words_[w]) return true;
        }
        return false;
    }

    // Smallest member >= from that is not in `excluded`, or size() if none.
    std::size_t next_outside(std::size_t from, const LabelSet& excluded) const {
        for (std::size_t w = from / 64; w < words_.size(); ++w) {
            std::uint64_t word = words_[w] & ~excluded.words_[w];
            if (w == from / 64) word &= ~std::uint64_t{0} << (from % 64);
            if (word != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
        }
        return bits_;
    }

    std::size_t size() const noexcept { return bits_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

std::string label_for_index(std::size_t index, int depth) {
    std::string digits(static_cast<std::size_t>(depth), '0');
    for (int d = depth - 1; d >= 0; --d) {
        digits[static_cast<std::size_t>(d)] = static_cast<char>('0' + index % 4);
        index /= 4;
    }
    return digits;
}

class OrderingSearch {
public:
    OrderingSearch(int depth, std::uint64_t budget)
        : depth_(depth), n_(1 << depth), dim_(n_ * n_), budget_(budget) {
        const auto dim = static_cast<std::size_t>(dim_);
        // Base-4 index order is lexicographic digit order.
        numerators_.resize(dim);
        for (std::size_t label = 0; label < dim; ++label) {
            const RVector column =
                label_to_column(SigmaLabel(label_for_index(label, depth_))) * std::sqrt(n_);
            auto& row = numerators_[label];
            row.resize(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                row[i] = static_cast<std::int8_t>(std::lround(column(static_cast<Index>(i))));
            }
        }

        with_value_.assign(dim, {LabelSet(dim), LabelSet(dim), LabelSet(dim)});
        for (std::size_t label = 0; label < dim; ++label) {
            for (std::size_t i = 0; i < dim; ++i) {
                with_value_[i][static_cast<std::size_t>(numerators_[label][i] + 1)].set(label);
            }
        }

        domains_.assign(dim, LabelSet(dim));
        for (std::size_t pos = 0; pos < dim; ++pos) {
            for (std::size_t label = 0; label < dim; ++label) {
                if (admissible(label, pos)) domains_[pos].set(label);
            }
        }
        used_ = LabelSet(dim);
        assignment_.assign(dim, 0);
    }

    FrameSearchOutcome run() {
        FrameSearchOutcome outcome;
        const bool found = place(0);
        outcome.nodes = nodes_;
        outcome.deepest = deepest_;
        if (found) {
            std::vector<SigmaLabel> labels;
            labels.reserve(assignment_.size());
            for (std::size_t label : assignment_) {
                labels.emplace_back(label_for_index(label, depth_));
            }
            outcome.frame = frame_from_labels(labels);
            outcome.frame->experimental = true;
            outcome.status = FrameSearchOutcome::Status::found;
        } else {
            outcome.status = exhausted_ ? FrameSearchOutcome::Status::budget_exhausted
                                        : FrameSearchOutcome::Status::infeasible;
        }
        return outcome;
    }

private:
    // Position-local demands: (a) leading columns nonnegative, (b) diagonal
    // sign, (c) alternating last column.
    bool admissible(std::size_t label, std::size_t pos) const {
        const auto& col = numerators_[label];
        const auto dim = static_cast<std::size_t>(dim_);
        if (pos < static_cast<std::size_t>(n_)) {
            for (std::int8_t x : col) {
                if (x < 0) return false;
            }
        }
        const int diagonal = col[pos];
        if (pos < dim / 2 ? diagonal <= 0 : diagonal >= 0) return false;
        if (pos == dim - 1) {
            int previous = 0;
            for (std::int8_t x : col) {
                if (x == 0) continue;
                if (x == previous) return false;
                previous = x;
            }
        }
        return true;
    }

    bool place(std::size_t pos) {
        const auto dim = static_cast<std::size_t>(dim_);
        if (pos == dim) return true;
        for (std::size_t label = domains_[pos].next_outside(0, used_); label < dim;
             label = domains_[pos].next_outside(label + 1, used_)) {
            if (nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            assignment_[pos] = label;
            used_.set(label);
            deepest_ = std::max(deepest_, static_cast<int>(pos) + 1);

            // Symmetry: W(pos, later) must equal W(later, pos).
            const std::size_t mark = trail_.size();
            bool consistent = true;
            for (std::size_t later = pos + 1; later < dim && consistent; ++later) {
                LabelSet narrowed = domains_[later];
                narrowed &= with_value_[pos][static_cast<std::size_t>(numerators_[label][later] + 1)];
                if (!(narrowed == domains_[later])) {
                    trail_.emplace_back(later, std::move(domains_[later]));
                    domains_[later] = std::move(narrowed);
                }
                consistent = domains_[later].any_outside(used_);
            }
            if (consistent && place(pos + 1)) return true;

            while (trail_.size() > mark) {
                domains_[trail_.back().first] = std::move(trail_.back().second);
                trail_.pop_back();
            }
            used_.reset(label);
            if (exhausted_) return false;
        }
        return false;
    }

    int depth_;
    int n_;
    int dim_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int deepest_ = 0;
    bool exhausted_ = false;

    std::vector<std::vector<std::int8_t>> numerators_;     // [label][row] in {-1, 0, 1}
    std::vector<std::array<LabelSet, 3>> with_value_;      // [row][value + 1]
    std::vector<LabelSet> domains_;                         // [position]
    std::vector<std::pair<std::size_t, LabelSet>> trail_;
    LabelSet used_;
    std::vector<std::size_t> assignment_;
};

}  // namespace

const char* to_string(FrameSearchOutcome::Status status) {
    switch (status) {
        case FrameSearchOutcome::Status::found:
            return "found";
        case FrameSearchOutcome::Status::budget_exhausted:
            return "budget_exhausted";
        case FrameSearchOutcome::Status::infeasible:
            return "infeasible";
    }
    return "unknown";
}

FrameSearchOutcome search_w(int depth, std::uint64_t budget) {
    if (depth < 1 || depth > kMaxSearchDepth) {
        throw std::invalid_argument("search_w: depth must be in [1, " +
                                    std::to_string(kMaxSearchDepth) + "], got " +
                                    std::to_string(depth));
    }
    if (depth == 1) {
        FrameSearchOutcome outcome;
        outcome.status = FrameSearchOutcome::Status::found;
        outcome.frame = build_w(1);
        outcome.deepest = outcome.frame->dim;
        return outcome;
    }
    return OrderingSearch(depth, budget).run();
}

}  // namespace pcpt
