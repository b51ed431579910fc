#pragma once

#include <iosfwd>

namespace pcoh::cli {

enum Exit : int { kOk = 0, kInvalidInput = 2, kNotCocycle = 3, kVerifyFailed = 4, kJetUnstable = 5 };

// argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcoh::cli
