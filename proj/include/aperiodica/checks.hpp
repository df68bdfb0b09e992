#pragma once

#include <string>
#include <vector>

#include "aperiodica/json_io.hpp"

namespace aperiodica {
namespace checks {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // first difference when failing
};

std::vector<std::string> check_names();

// Expected values (published worked examples), embedded.
Json golden(const std::string& name);
// Recomputed from scratch by the library.
Json compute(const std::string& name);

// Runs every check whose name contains `only` (all when empty). When
// golden_dir is non-empty, expectations are loaded from <dir>/<name>.json
// instead of the embedded constants; unreadable files fail the check.
std::vector<CheckResult> run(const std::string& only = "", const std::string& golden_dir = "");

void write_goldens(const std::string& dir);

}  // namespace checks
}  // namespace aperiodica
