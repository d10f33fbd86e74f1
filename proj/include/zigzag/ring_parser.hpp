#pragma once

#include <string>
#include <vector>

#include "zigzag/derivation.hpp"

namespace zigzag {

/// A presented ring with its derivations, as read from one source file:
///
///   ring vars x, y, z, u
///   ideal { x*y - (z^2 - 1)*z; ... }           # may be empty
///   derivation d1 { x -> 0; z -> x^2; ... }    # must map every variable
///
/// Polynomials use integer or a/b literals, + - * ^ and parentheses; the
/// product sign is never implicit.
struct RingFile {
  PresentedRing ring;
  std::vector<Derivation> derivations;
};

RingFile parse_ring_file(const std::string& text);

/// Parses one polynomial over the given variables. Same grammar and errors.
Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars);

}  // namespace zigzag
