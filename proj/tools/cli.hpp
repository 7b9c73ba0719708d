#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dichroma::cli {

// Runs one command. args excludes the program name. The report goes to out as
// JSON; diagnostics and wall time go to err. Returns 0 ok, 1 verdict false, 2 error.
// default_budget stands in for DICHROMA_BUDGET.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::optional<std::string> default_budget = std::nullopt);

}  // namespace dichroma::cli
