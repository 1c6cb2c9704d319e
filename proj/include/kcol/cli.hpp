#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcol::cli {

enum exit_code : int {
    ok = 0,
    negative = 1,      // the question has a "no" answer (infeasible, Lister wins, ...)
    bad_input = 2,     // malformed input, violated precondition, or size limit
    internal_error = 3 // a self-check failed; the instance is dumped to `err`
};

// Runs one command. `args` excludes the program name. A JSON report goes to
// `out`, a one-line summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace kcol::cli
