#include "ctxspell/text_norm.hpp"
#include "ctxspell/utf8.hpp"

namespace ctxspell {

namespace {

constexpr char32_t kHyphen = U'-';

// Strips leading/trailing hyphens in place. Interior hyphens stay.
void trim_hyphens(std::u32string& s) {
    std::size_t begin = 0;
    while (begin < s.size() && s[begin] == kHyphen)
        ++begin;
    std::size_t end = s.size();
    while (end > begin && s[end - 1] == kHyphen)
        --end;
    s = s.substr(begin, end - begin);
}

} // namespace

bool is_normalized_token(std::string_view token) {
    if (token.empty())
        return false;
    const std::u32string cps = utf8::decode_lenient(token);
    if (cps.front() == kHyphen || cps.back() == kHyphen)
        return false;
    for (char32_t cp : cps) {
        if (cp == kHyphen)
            continue;
        if (!utf8::is_letter(cp) || utf8::to_lower(cp) != cp)
            return false;
    }
    return true;
}

std::optional<std::string> normalize_token(std::string_view form) {
    std::u32string out;
    for (char32_t cp : utf8::decode_lenient(form)) {
        if (cp == kHyphen) {
            out.push_back(cp);
        } else if (utf8::is_letter(cp)) {
            out.push_back(utf8::to_lower(cp));
        } else {
            return std::nullopt;
        }
    }
    trim_hyphens(out);
    if (out.empty())
        return std::nullopt;
    return utf8::encode(out);
}

std::vector<std::string> tokenize_line(std::string_view line) {
    std::vector<std::string> tokens;
    std::u32string current;
    bool poisoned = false;

    auto flush = [&] {
        if (!current.empty() && !poisoned) {
            trim_hyphens(current);
            if (!current.empty())
                tokens.push_back(utf8::encode(current));
        }
        current.clear();
        poisoned = false;
    };

    for (char32_t cp : utf8::decode_lenient(line)) {
        if (utf8::is_letter(cp)) {
            current.push_back(utf8::to_lower(cp));
        } else if (cp == kHyphen) {
            current.push_back(cp);
        } else if (utf8::is_digit(cp) || cp == utf8::kReplacement) {
            // Digits are not separators: they disqualify the whole token.
            current.push_back(cp);
            poisoned = true;
        } else {
            // Whitespace and punctuation end the token.
            flush();
        }
    }
    flush();
    return tokens;
}

} // namespace ctxspell
