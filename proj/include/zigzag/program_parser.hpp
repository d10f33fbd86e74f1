#pragma once

#include <string>

#include "zigzag/boundary_graph.hpp"

namespace zigzag {

/// Parses the construction grammar:
///
///   base hirzebruch <int>
///   step1 (on-d | free)            # optional
///   blow (between <id> <id> | free)  # repeated
///   final { G on <id>; G on <id>; ... }
///
/// '#' starts a comment. parse_program(print_program(p)) == p for every
/// complete program. Throws ParseError with line and column on bad input.
BlowupProgram parse_program(const std::string& text);

}  // namespace zigzag
