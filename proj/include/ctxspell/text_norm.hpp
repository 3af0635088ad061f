#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctxspell {

// True when `token` already satisfies the normalized-token contract:
// non-empty, lowercase letters and hyphens only, no leading or trailing
// hyphen.
bool is_normalized_token(std::string_view token);

// Lowercases a single word form and strips leading/trailing hyphens.
// Returns nullopt when the form contains anything besides letters and
// hyphens, or normalizes to empty. Never splits; use tokenize_line for
// running text.
std::optional<std::string> normalize_token(std::string_view form);

// Splits a raw line into normalized tokens. Whitespace and punctuation act
// as separators; a token that still carries a non-letter, non-hyphen
// character (digits, mostly) is dropped whole. Order is preserved and
// malformed UTF-8 never throws here, it just poisons the enclosing token.
std::vector<std::string> tokenize_line(std::string_view line);

} // namespace ctxspell
