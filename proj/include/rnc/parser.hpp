#pragma once

#include "rnc/formula.hpp"

#include <string>
#include <string_view>

namespace rnc {

// Text grammar (whitespace-separated tokens, '#' starts a line comment):
//
//   formula := literal | const | '(' '|' formula* ')' | '{' '&' formula* '}'
//   literal := IDENT '>=' NUM | IDENT '<=' NUM
//   const   := NUM '>=' NUM | 'T' | 'F'
//   IDENT   := [A-Za-z_][A-Za-z0-9_]*
//   NUM     := decimal or fraction p/q, value in [0,1]
//
// 'T' parses as the constant 1>=0 and 'F' as 0>=1.
Formula parse(std::string_view text);

// Canonical printing: single spaces, thresholds as shortest exact decimal
// else p/q; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f);

std::string print_literal(const Literal& lit);

} // namespace rnc
