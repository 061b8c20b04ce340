#pragma once

#include <string_view>

#include "stiefel/polynomial.hpp"

namespace stiefel {

/// Parses a polynomial over `vars`.
///
/// Grammar (whitespace insignificant):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := coeff | var ('^' int)? | '(' expr ')' ('^' int)? | '-' factor
///     coeff  := int | int '/' posint
///
/// Multiplication must be explicit, so "2x" is rejected. Errors are reported as
/// ParseError carrying the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text, const Variables& vars);

}  // namespace stiefel
