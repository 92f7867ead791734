#pragma once

#include <iosfwd>

namespace wstab {

/// Entry point of the wstab binary. Returns 0 on success, 1 on an input
/// error and 2 when an internal invariant fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wstab
