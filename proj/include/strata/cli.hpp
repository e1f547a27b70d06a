#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "strata/json_io.hpp"

namespace strata::cli {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBreach = 3 };

/// Runs one command line (without the program name); the report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One "path = value" line per leaf, in canonical key order.
std::string render_text(const io::Json& j);

}  // namespace strata::cli
