#pragma once

#include <string_view>

#include "hybridres/polynomial.hpp"

namespace hybridres {

/// Parses an expression of the polynomial grammar
///
///   expr     := ["+"|"-"] term (("+"|"-") term)*
///   term     := factor ("*" factor)*
///   factor   := base ("^" nat)?
///   base     := rational | var | "(" expr ")"
///   rational := int ("/" nat)?
///
/// Implicit multiplication is rejected. Errors carry a 1-based column; the
/// line is `line` (useful when parsing files).
Polynomial parsePolynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1);

/// Parses "a", "-3/4", ... (used for points).
Rational parseRational(std::string_view text);

}  // namespace hybridres
