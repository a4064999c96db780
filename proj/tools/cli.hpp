#pragma once

#include <iosfwd>

namespace dtri::cli {

// Full command-line front end. Exit codes: 0 success, 2 infeasible,
// 3 invalid input, 4 resource limit, 5 internal invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dtri::cli
