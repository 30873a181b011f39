#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semreg/expr_tree.hpp"

namespace semreg {

/// Fully parenthesized infix, e.g. "((2 * x1) + 3)". Constants use 17
/// significant digits so that parse_expression(format_expression(t)) == t.
/// Empty `names` means x1..xL.
std::string format_expression(const ExprTree& tree, const std::vector<std::string>& names = {});

/// Inverse of format_expression. Whitespace is insignificant. A leading '-'
/// in operand position belongs to the number literal. Throws ParseError.
ExprTree parse_expression(std::string_view text, const std::vector<std::string>& names = {});

/// Shortest-exact decimal text for a double ("%.17g").
std::string format_real(double value);

}  // namespace semreg
