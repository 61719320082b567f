#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jtp {

// Runs the command-line tool on already-split arguments (program name
// excluded). Commands that take a document from stdin read `in`; emitted
// documents go to `out` (or the --out file); errors are reported as a
// single machine-parsable line "error: <kind>: <message>" on `err`.
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition violation, 4 classification error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace jtp
