#pragma once

#include <string>
#include <vector>

#include "quant/io.hpp"

namespace quant {

struct CheckResult {
    std::string what;
    double measured;
    double tolerance;
    bool passed;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    std::string note;

    bool passed() const;
    /// The check closest to (or furthest past) its tolerance.
    const CheckResult& worst() const;
};

std::vector<std::string> verify_suite_names();

/// Runs every invariant suite; `only` restricts to the named suites.
std::vector<SuiteResult> run_verify(const std::vector<std::string>& only = {});

json to_json(const std::vector<SuiteResult>& results);

} // namespace quant
