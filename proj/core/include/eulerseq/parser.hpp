#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulerseq/mpoly.hpp"
#include "eulerseq/poly.hpp"

namespace eulerseq {

// Recursive-descent parser for the polynomial expression grammar shared by
// every input document: integer literals, variable identifiers, + - * ^,
// parentheses; ^ takes nonnegative integer exponents; whitespace is
// insignificant. The single entry point for rings, relations and divisor
// place polynomials.
MPoly parse_polynomial(const Field& f, const std::vector<std::string>& vars,
                       std::string_view text);

Poly1 parse_poly1(const Field& f, const std::string& var, std::string_view text);

}  // namespace eulerseq
