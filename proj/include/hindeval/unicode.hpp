#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "hindeval/error.hpp"

namespace hindeval {

// Decodes one UTF-8 sequence starting at `pos`; throws on malformed input,
// naming the byte offset. Advances `pos` past the sequence.
inline char32_t utf8_decode_at(std::string_view s, std::size_t& pos) {
    auto fail = [&] {
        throw input_error("invalid UTF-8 at byte offset " + std::to_string(pos));
    };
    const auto b0 = static_cast<unsigned char>(s[pos]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
        len = 1;
        cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        fail();
        return 0;
    }
    if (pos + len > s.size()) fail();
    for (std::size_t i = 1; i < len; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) fail();
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlongs, surrogates, and out-of-range scalars.
    static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail();
    pos += len;
    return cp;
}

inline std::vector<char32_t> utf8_decode(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) out.push_back(utf8_decode_at(s, pos));
    return out;
}

inline void utf8_append(std::string& out, char32_t cp) {
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
}

inline std::string utf8_encode(const std::vector<char32_t>& cps) {
    std::string out;
    for (char32_t cp : cps) utf8_append(out, cp);
    return out;
}

inline bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

// Unicode NFC via ICU. Input must already be valid UTF-8.
inline std::string to_nfc(std::string_view s) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU NFC instance unavailable");
    icu::UnicodeString in = icu::UnicodeString::fromUTF8(
        icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
    icu::UnicodeString out = nfc->normalize(in, status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalization failed");
    std::string result;
    out.toUTF8String(result);
    return result;
}

// Validates UTF-8, applies NFC, strips surrounding whitespace, and collapses
// internal whitespace runs to a single space.
inline std::string normalize(std::string_view raw) {
    utf8_decode(raw);  // validation pass; reports byte offset on failure
    const std::string nfc = to_nfc(raw);
    const std::vector<char32_t> cps = utf8_decode(nfc);
    std::vector<char32_t> out;
    out.reserve(cps.size());
    bool pending_space = false;
    for (char32_t cp : cps) {
        if (is_space(cp)) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) out.push_back(U' ');
            pending_space = false;
            out.push_back(cp);
        }
    }
    return utf8_encode(out);
}

}  // namespace hindeval
