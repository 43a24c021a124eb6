#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcpt/frames.hpp"
#include "pcpt/tolerances.hpp"

namespace pcpt::cli {

struct SuiteItem {
    std::string id;
    std::string title;
    bool pass = false;
    bool expected_negative = false;  // a documented non-CPT, counted as a pass
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    int extra_n = 0;  // additional representation dimension to exercise; 0 = none
    // Applied to each canonical frame before it is validated (fault injection).
    std::function<void(EntangledFrame&)> frame_hook;
    Tolerances tol;
};

struct SuiteReport {
    std::vector<SuiteItem> items;
    bool all_passed() const;
};

SuiteReport run_suite(const SuiteOptions& options = {});
// Wall-clock values are left out unless requested, so repeated runs print identical bytes.
void print_table(const SuiteReport& report, std::ostream& out, bool timings = false);
nlohmann::json to_json(const SuiteReport& report, bool timings = false);

}  // namespace pcpt::cli
