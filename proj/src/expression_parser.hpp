#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "gmconn/ratfunc.hpp"

namespace gmconn::detail {

// Maps an identifier to a 0-based variable index, or nullopt if unknown.
using VariableResolver = std::function<std::optional<int>(std::string_view)>;

// Recursive-descent parser for rational expressions:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
RatFunc parse_expression(std::string_view text, int nvars, const VariableResolver& resolve);

}  // namespace gmconn::detail
