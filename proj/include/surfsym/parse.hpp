#pragma once

#include "surfsym/surface.hpp"

#include <string>

namespace surfsym {

// Parsed surface input plus the options-independent echo of the source.
struct InputSpec {
    MPoly x, y, z;
};

// Input grammar: three lines `x = <expr>`, `y = <expr>`, `z = <expr>` in any
// order (duplicates rejected), blank lines and `#` comments ignored.
// <expr> supports + - * ^ with nonnegative integer exponents, parentheses,
// rational literals `p/q` and the variables t, s; whitespace-insensitive.
// Errors are position-annotated (ParseError).
InputSpec parse_input(const std::string& text);

// Single expression, for tests and fixtures. Line number used in errors.
MPoly parse_expression(const std::string& text, int line = 1);

} // namespace surfsym
