#pragma once

#include <string>

#include "spinorss/polynomial.hpp"

namespace spinorss {

/// Parses the textual scalar syntax used in input files and reports:
/// rationals "a/b", the imaginary unit "i", declared symbol names
/// ("_bar" resolves to the conjugate partner), "+", "-", "*", "^",
/// parentheses, and division by constants. Throws ParseError on bad
/// syntax or an undeclared symbol.
Polynomial parse_scalar(const std::string& text, const Polynomial::Table& table);

} // namespace spinorss
