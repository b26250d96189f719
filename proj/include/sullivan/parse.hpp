#pragma once

// Text formats.
//
// Model file (UTF-8, one statement per line, `#` starts a comment):
//
//     generator x
//     generator y w
//     d w = x^y
//
// Generators without a `d` line have zero differential.
//
// Element expression:
//
//     expr     := [sign] term (sign term)*
//     term     := rational [monomial] | monomial
//     monomial := ident ('^' ident)*
//     rational := int ['/' posint]

#include <string>
#include <string_view>

#include "sullivan/dga.hpp"

namespace sullivan {

inline constexpr std::string_view kHeisenbergModelName = "heisenberg";

/// Throws ParseError (with line and column) or ValidationError.
Dga parse_model(std::string_view text);

/// `heisenberg` names the built-in model; anything else is read as a file path.
/// Throws InputError when the file cannot be read.
Dga load_model(const std::string& source);

/// Throws ParseError on bad syntax or unknown generators.
Element parse_element(const Dga& dga, std::string_view text);

}  // namespace sullivan
