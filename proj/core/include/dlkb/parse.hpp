#pragma once

#include <string_view>
#include <vector>

#include "dlkb/ast.hpp"
#include "dlkb/commands.hpp"
#include "dlkb/signals.hpp"

namespace dlkb {

// Single complete form; trailing input other than whitespace/comments is a
// ParseError.  Whitespace-insensitive; `;` starts a line comment.
Description parse_description(std::string_view text);
KbCommand parse_command(std::string_view text);

// Whole file / REPL buffer: any number of command forms.
std::vector<KbCommand> parse_command_file(std::string_view text);

// True when the text holds at least one complete balanced form (used by the
// REPL to decide whether to keep reading lines).
bool forms_balanced(std::string_view text);

}  // namespace dlkb
