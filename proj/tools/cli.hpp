#pragma once

#include <iosfwd>

namespace flamefront::cli {

// Exit codes: 0 success, 1 usage or parameter error, 2 numerical or
// validation failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flamefront::cli
