#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgv::cli {

// Runs the command-line tool on already-split arguments (no program name).
// Everything the tool prints goes through `out` and `err`, which makes the
// whole surface testable in-process.
//
// Exit codes: 0 on success, 1 when the requested property fails to hold
// (positive defect, sweep mismatch, bound violation, counterexamples under a
// theorem predicate), 2 on bad input or bad usage.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dgv::cli
