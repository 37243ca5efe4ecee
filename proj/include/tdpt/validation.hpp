// validation.hpp — Property suite behind `tdpt validate` and the acceptance binary

#pragma once

#include "tdpt/config.hpp"

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace tdpt {

// A measured quantity and the open interval (lo, hi) it must fall in.
struct Measurement {
    std::string label;
    double value = 0.0;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool pass() const { return value > lo && value < hi; }
    std::string describe() const;
};

Measurement below(std::string label, double value, double bound);
Measurement above(std::string label, double value, double bound);

struct CheckResult {
    int id = 0;
    std::string name;
    std::vector<Measurement> measurements;
    // Set when a check threw instead of producing a value.
    std::string error;

    bool pass() const;
};

// Runs the thirteen acceptance properties on the scenario of `c`. Progress lines are
// written to `log` when given. Results come back in criterion order.
std::vector<CheckResult> run_acceptance(const Config& c, std::ostream* log = nullptr);

// One line per criterion: "PASS  3 route equivalence: ...".
void print_summary(const std::vector<CheckResult>& results, std::ostream& os);
// Structured report: one JSON object per criterion with every measurement.
std::string report_json(const std::vector<CheckResult>& results);

} // namespace tdpt
