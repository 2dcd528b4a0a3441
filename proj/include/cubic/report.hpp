#pragma once

#include <string>
#include <vector>

namespace cubic {

/*
 * One verification run serializes to a flat list of named checks, each
 * carrying enough to re-derive it: the inputs, the expected value with
 * a provenance tag, and what actually came out.
 *
 * Provenance vocabulary:
 *   closed_form    analytic expression evaluated on the spot
 *   oracle         frozen, independently derived value
 *   identity       two internal computations must coincide
 *   normalization  pinned convention (sign, branch, gauge, prefactor)
 *   enumeration    exhaustive finite search
 *   direct         definition applied as stated
 */
struct CheckResult {
    std::string name;
    std::string inputs;
    std::string expected;
    std::string computed;
    std::string provenance;
    bool pass = false;
};

struct ReportConfig {
    long p = 7;
    int precision = 6;
    int c = 0;
    int order = 12;
    unsigned long seed = 1;
    int level = 3;
};

struct Report {
    ReportConfig config;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    // Stable field order, no floats outside %.12g strings; reruns with
    // the same config are byte-identical.
    std::string to_json() const;
    std::string to_csv() const;
};

std::string format_double(double x);

}  // namespace cubic
