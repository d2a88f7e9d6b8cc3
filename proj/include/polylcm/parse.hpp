#pragma once

#include <string>

#include "polylcm/polynomial.hpp"

namespace polylcm {

// Accepts the comma form "1,0,1" (ascending coefficients) or an expression
// in x with +, -, *, ^ and parentheses, e.g. "(x+1)^2 - 2*x". Coefficients
// are arbitrary-precision integers. Syntax errors carry the byte offset.
Polynomial parse_polynomial(const std::string& text);

}  // namespace polylcm
