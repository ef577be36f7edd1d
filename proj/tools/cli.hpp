#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpack::cli {

// 0 ok, 1 semantic failure, 2 usage or range error, 3 impossible instance.
enum Exit : int { Ok = 0, Failure = 1, Usage = 2, Excluded = 3 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lpack::cli
