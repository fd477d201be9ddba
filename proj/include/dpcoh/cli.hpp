#pragma once
#include <iosfwd>

namespace dpcoh {

// Batch front-end. Exit codes: 0 success, 2 validation failure (bad input,
// malformed JSON, unknown names), 3 resource cap exceeded.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dpcoh
