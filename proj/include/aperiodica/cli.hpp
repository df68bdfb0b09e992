#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aperiodica {
namespace cli {

// Parses and runs one invocation. Exit status: 0 success, 1 domain error,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace aperiodica
