#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellipt {

struct CheckResult {
    std::string name;
    long samples = 0;
    long violations = 0;
    /// Largest deviation seen; for inequality checks the worst margin.
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

enum class Suite { identities, theorem1, asymptotics, spectral, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

std::vector<CheckResult> run_suite(Suite suite);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace ellipt
