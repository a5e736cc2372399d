#pragma once

#include "origami/quad.hpp"

#include <string>

namespace origami::alg {

// Grammar: "p", "p/q", "a+b*sqrt(D)", "a-b*sqrt(D)", "sqrt(D)", "b*sqrt(D)",
// with a, b rationals. Whitespace is ignored. Throws std::invalid_argument.
QuadElt parse_quad(const std::string& s);

std::string quad_str(const QuadElt& x);

} // namespace origami::alg
