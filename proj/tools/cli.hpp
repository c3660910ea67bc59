#pragma once

#include <ostream>

namespace comlang::cli {

/// Entire command-line surface. Returns the process exit code: 0 success,
/// 1 domain error (JSON on `err`), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comlang::cli
