#pragma once

#include <iosfwd>

namespace grpn::cli {

/// Runs the grpn command line. Exit codes: 0 success, 1 verification
/// failure, 2 usage or parse error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace grpn::cli
