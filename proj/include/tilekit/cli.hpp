#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilekit::cli {

// Subcommands: gen, bolle, verify, multiplicity, wheel, eq1, classify,
// render, cases. Exit 0 on pass/success, 1 on verification failure
// (reports are still emitted), 2 on input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilekit::cli
