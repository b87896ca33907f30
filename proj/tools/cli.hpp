#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jt::cli {

inline constexpr const char* kJsonSchema = "jtype/1";

// Runs one jtype invocation. `args` excludes the program name. Returns the
// process exit code: 0 on success, 2 on bad input, 3 on an internal fault.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jt::cli
