#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zigzag {

/// Full command-line front end, callable in-process. Returns the exit code:
/// 0 success, 1 a mathematical check failed or a certificate was not
/// obtained, 2 unusable input (bad arguments, unreadable files, parse or
/// construction errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace zigzag
