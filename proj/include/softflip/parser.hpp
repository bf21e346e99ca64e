#pragma once

#include <string>
#include <string_view>

#include "softflip/ir.hpp"

namespace softflip {

// Parses IR source text (grammar in docs/ir-format.md) into a validated
// Program. Throws ParseError with a 1-based line number.
Program parse_program(std::string_view text);

// Canonical text form. parse_program(print_program(p)) is structurally
// equal to p, and printing is idempotent: print(parse(print(p))) == print(p).
std::string print_program(const Program& p);

// Immediate token -> word ("-12", "33", "0x1f", "2.5"). Returns false on
// malformed input. Shared by the parser and the CLI's --input option.
bool parse_imm_token(std::string_view token, Word& out);

}  // namespace softflip
