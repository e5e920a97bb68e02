#pragma once

#include <iosfwd>

namespace cartanqt::cli {

/// Runs the command line.  Returns 0 on success, 1 when a verification
/// fails and 2 on bad arguments.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace cartanqt::cli
