#pragma once

#include <ostream>

namespace ehrhart::cli {

/// Exit codes: 0 success, 1 bad input or usage, 2 internal invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ehrhart::cli
