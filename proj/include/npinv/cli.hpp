#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npinv::cli {

/// args excludes the program name. Returns 0 on success, 1 on usage, parse or
/// precondition errors, 2 when a verification reports failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Replace every identifier token equal to name by "(value)".
std::string substitute_param(const std::string& text, const std::string& name, const std::string& value);

}  // namespace npinv::cli
