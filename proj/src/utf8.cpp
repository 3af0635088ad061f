#include "ctxspell/utf8.hpp"
#include "ctxspell/errors.hpp"

#include <cstddef>
#include <cstdint>

namespace ctxspell::utf8 {

namespace {

// Returns the number of code points appended, or 0 on malformed input.
// On success advances `i` past the sequence.
bool decode_one(std::string_view text, std::size_t& i, char32_t& out) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        out = b0;
        i += 1;
        return true;
    }
    std::size_t len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return false;
    }
    if (i + len > text.size())
        return false;
    for (std::size_t k = 1; k < len; ++k) {
        unsigned char bk = byte(i + k);
        if ((bk & 0xC0) != 0x80)
            return false;
        cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings, surrogates, and out-of-range values.
    static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        return false;
    out = cp;
    i += len;
    return true;
}

} // namespace

std::u32string decode(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp;
        if (!decode_one(text, i, cp))
            throw FormatError("malformed UTF-8 at byte offset " + std::to_string(i));
        out.push_back(cp);
    }
    return out;
}

std::u32string decode_lenient(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp;
        if (decode_one(text, i, cp)) {
            out.push_back(cp);
        } else {
            out.push_back(kReplacement);
            i += 1;
        }
    }
    return out;
}

std::string encode(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string encode(std::u32string_view code_points) {
    std::string out;
    out.reserve(code_points.size());
    for (char32_t cp : code_points)
        out += encode(cp);
    return out;
}

bool is_letter(char32_t cp) {
    if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z'))
        return true;
    if (cp < 0xC0)
        return false;
    if (cp <= 0xFF)
        return cp != 0xD7 && cp != 0xF7; // multiplication and division signs
    if (cp <= 0x024F)
        return true; // Latin Extended-A and -B
    if (cp >= 0x0250 && cp <= 0x02AF)
        return true; // IPA extensions
    if (cp >= 0x0386 && cp <= 0x03FF)
        return cp != 0x0387; // Greek, minus the ano teleia
    if (cp >= 0x0400 && cp <= 0x04FF)
        return true; // Cyrillic
    if (cp >= 0x1E00 && cp <= 0x1EFF)
        return true; // Latin Extended Additional
    return false;
}

bool is_digit(char32_t cp) {
    return cp >= U'0' && cp <= U'9';
}

bool is_whitespace(char32_t cp) {
    switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x85:   // NEL
    case 0xA0:   // no-break space
    case 0x2028: // line separator
    case 0x2029: // paragraph separator
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200A; // en/em/thin spaces
    }
}

char32_t to_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z')
        return cp + 0x20;
    if (cp < 0xC0)
        return cp;
    // Latin-1 Supplement
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)
        return cp + 0x20;
    if (cp == 0x0130)
        return U'i'; // I with dot above
    // Latin Extended-A: mostly interleaved case pairs
    if (cp >= 0x0100 && cp <= 0x0137)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0139 && cp <= 0x0148)
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178)
        return 0xFF; // Y with diaeresis
    if (cp >= 0x0179 && cp <= 0x017E)
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x017F)
        return U's'; // long s case-folds to s
    // Latin Extended Additional: interleaved case pairs
    if ((cp >= 0x1E00 && cp <= 0x1E95) || (cp >= 0x1EA0 && cp <= 0x1EFF))
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x1E9E)
        return 0xDF; // capital sharp s
    // Greek
    if (cp == 0x0386)
        return 0x03AC;
    if (cp >= 0x0388 && cp <= 0x038A)
        return cp + 0x25;
    if (cp == 0x038C)
        return 0x03CC;
    if (cp == 0x038E || cp == 0x038F)
        return cp + 0x3F;
    if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2)
        return cp + 0x20;
    // Cyrillic
    if (cp >= 0x0400 && cp <= 0x040F)
        return cp + 0x50;
    if (cp >= 0x0410 && cp <= 0x042F)
        return cp + 0x20;
    return cp;
}

} // namespace ctxspell::utf8
