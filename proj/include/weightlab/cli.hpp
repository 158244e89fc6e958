#pragma once

#include <ostream>

namespace weightlab {

// Exit codes: 0 success, 1 not unitarizable / divergent / failed verification, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weightlab
