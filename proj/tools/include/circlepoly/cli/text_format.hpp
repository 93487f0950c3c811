#ifndef CIRCLEPOLY_CLI_TEXT_FORMAT_HPP
#define CIRCLEPOLY_CLI_TEXT_FORMAT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "circlepoly/function_spec.hpp"

namespace circlepoly::cli {

// Text grammar for function specs, ascending coefficient lists:
//
//   spec    := "zero"
//            | "const" complex
//            | "ratio" list "/" list
//            | "coeffs" list
//   list    := "[" complex ("," complex)* "]"
//   complex := real | real ("+"|"-") [unsigned] "i" | [sign] [unsigned] "i"
//
// Whitespace is allowed between tokens. Errors throw SyntaxError with the
// byte offset of the offending character.

Complex parse_complex(std::string_view text);
std::vector<Complex> parse_complex_list(std::string_view text);

/// Throws SyntaxError or DenominatorVanishesInDisk.
FunctionSpec parse_spec(std::string_view text);

/// "a+bi" / "a-bi", shortest round-trip decimal digits for both parts.
std::string format_complex(Complex z);
std::string format_double(double x);

/// "4,8,20", "6..32" or "6..32 step 2".
std::vector<std::size_t> parse_degree_list(std::string_view text);

}  // namespace circlepoly::cli

#endif  // CIRCLEPOLY_CLI_TEXT_FORMAT_HPP
