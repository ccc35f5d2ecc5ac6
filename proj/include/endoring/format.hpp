#pragma once

#include <string>

#include "endoring/module_point.hpp"

namespace endoring {

// Base-p expansion of n as written arithmetic, highest power first:
// digit_form({5,3,125}, 103) == "5^2*4 + 3". Zero prints as "0".
std::string digit_form(const RingParams& pr, Int n);

// "[[a,b],[C,d]]" with the bottom-left as the full value; re-parses to an
// equal matrix.
std::string to_string(const EndoMatrix& A);

// "(x,y)"; re-parses to an equal point.
std::string to_string(const ModulePoint& v);

// Monic polynomials print as "x^2 + 56x + 34" or "x + 124"; the zero
// polynomial as "0".
std::string to_string(const IntPoly& g);

} // namespace endoring
