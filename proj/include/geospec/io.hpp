#pragma once

// Parsers for the textual value formats used at the command-line boundary:
// rationals "p/q", surds "(p+q*sqrt(D))/r", decimals, and alpha specs
// "int:A" | "quad:B:plus|minus" | "poly:c0,c1,...,1".

#include <string>
#include <vector>

#include "geospec/limsup.hpp"
#include "geospec/surd.hpp"

namespace geospec {

// Inverse of Surd::to_string; also accepts plain rationals.
Surd parse_surd(const std::string& text);

// Dispatch by shape: "sqrt" selects the surd grammar, a '.' or exponent the
// decimal one, anything else the rational one.
RealInput parse_real_input(const std::string& text, mpfr_prec_t decimal_bits = 128);

Alpha parse_alpha_spec(const std::string& text);

// Comma-separated signed integers.
std::vector<long> parse_digit_list(const std::string& text);

}  // namespace geospec
