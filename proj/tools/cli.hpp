#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qstirling/report.hpp"

namespace qstirling::cli {

// Runs one command line (without the program name). Returns 0 on success,
// 1 when a verification fails, a scan finds counterexamples or output cannot
// be written, and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Suite names accepted by `verify --suite`, in run order ("all" excluded).
const std::vector<std::string>& suite_names();

// One verify suite; unset bounds fall back to the defaults.
// Throws std::invalid_argument for an unknown name.
Report run_suite(std::string_view name, std::optional<int> max_n, std::optional<int> m);

}  // namespace qstirling::cli
