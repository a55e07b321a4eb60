#pragma once

#include <string_view>
#include <vector>

#include "gincs/polynomial.hpp"

namespace gincs {

/// Parses a signed sum of terms such as "3*x[1,1]^2 - x[1,2]*x[2,1]".
/// Coefficients are reduced mod p. Throws ParseError (with byte offset) on
/// malformed input and std::out_of_range on a variable outside the ring.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses a monomial of T = K[y_1..y_n] such as "y1^2*y3" (or "1") into its
/// exponent vector.
std::vector<int> parse_t_monomial(std::string_view text, int n);

}  // namespace gincs
