#pragma once

#include <iosfwd>

namespace akc::cli {

/// Entry point shared by the akc binary and the tests. Exit codes: 0 on
/// success, 2 for bad arguments, 1 for runtime failures. Failures print one
/// line to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace akc::cli
