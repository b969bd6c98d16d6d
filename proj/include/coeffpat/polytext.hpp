#pragma once

#include <string>
#include <string_view>

#include "coeffpat/fpoly.hpp"

namespace coeffpat {

/// Parses either a comma-separated low-to-high coefficient list ("1,1,0,1")
/// or a sum of monomials ("1+x+x^3", "2x^2", "3*x", "-x"). Coefficients are
/// reduced mod p. Throws ParseError naming the offending token; a result that
/// reduces to zero is rejected.
FpPoly parse_poly(std::string_view text, Prime p);

/// Symbolic form, e.g. "1+x+x^3" or "2+x^2"; "0" for the zero polynomial.
std::string format_poly(const FpPoly& f);

/// Comma-separated coefficient list.
std::string format_coeff_list(const FpPoly& f);

}  // namespace coeffpat
