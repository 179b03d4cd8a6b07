#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biloc {

/// Verbs: validate, sublocales, classify, rmt, suite, search, convert,
/// construct. `args` excludes the program name. Returns 0 on success, 1 when
/// a check fails or a counterexample is found, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biloc
