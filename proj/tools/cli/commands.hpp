#pragma once

#include <iosfwd>

namespace nsz::cli {

/// Exit codes: 0 ok, 1 failed check or runtime error, 2 usage error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nsz::cli
