#pragma once

#include <iosfwd>

namespace splus::cli {

// Full command-line driver, factored out of main() so tests can call it
// in-process. Returns the process exit code: 0 success, 1 membership or
// verification failure, 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splus::cli
