#pragma once

#include <ostream>

namespace ndeg {

// Exit codes: 0 ok, 1 a check failed, 2 invalid or degenerate input, 3 parse/usage error, 4 over budget.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ndeg
