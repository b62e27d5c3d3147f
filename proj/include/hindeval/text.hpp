#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "hindeval/error.hpp"
#include "hindeval/unicode.hpp"

namespace hindeval {

inline constexpr char32_t kDanda = U'।';        // ।
inline constexpr char32_t kDoubleDanda = U'॥';  // ॥

struct Token {
    std::string surface;  // NFC, non-empty, no whitespace
    std::size_t index = 0;

    bool operator==(const Token&) const = default;
};

struct Segment {
    std::vector<Token> tokens;
    std::string raw;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
    const std::string& surface(std::size_t i) const { return tokens[i].surface; }
};

struct EvalUnit {
    Segment candidate;
    std::vector<Segment> references;  // non-empty
    std::size_t line_no = 0;          // 1-based
};

struct Corpus {
    std::vector<EvalUnit> units;
    std::size_t n_refs = 0;

    bool empty() const { return units.empty(); }
    std::size_t size() const { return units.size(); }
};

namespace detail {

inline bool is_detachable_punct(char32_t cp) {
    if (cp == kDanda || cp == kDoubleDanda) return true;
    switch (cp) {
        case U'.': case U',': case U'!': case U'?':
        case U';': case U':': case U'"': case U'(': case U')':
            return true;
        default:
            return false;
    }
}

}  // namespace detail

// Splits normalized text on whitespace and detaches sentence punctuation
// (danda, double danda, ASCII .,!?;:"() ) into standalone tokens. A pair of
// adjacent single dandas is folded into one double-danda token.
inline Segment tokenize(std::string_view normalized) {
    Segment seg;
    seg.raw = std::string(normalized);
    std::vector<char32_t> word;
    auto flush_word = [&] {
        if (!word.empty()) {
            seg.tokens.push_back({utf8_encode(word), seg.tokens.size()});
            word.clear();
        }
    };
    const std::vector<char32_t> cps = utf8_decode(normalized);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const char32_t cp = cps[i];
        if (is_space(cp)) {
            flush_word();
        } else if (detail::is_detachable_punct(cp)) {
            flush_word();
            if (cp == kDanda && i + 1 < cps.size() && cps[i + 1] == kDanda) {
                seg.tokens.push_back({utf8_encode({kDoubleDanda}), seg.tokens.size()});
                ++i;
            } else {
                seg.tokens.push_back({utf8_encode({cp}), seg.tokens.size()});
            }
        } else {
            word.push_back(cp);
        }
    }
    flush_word();
    return seg;
}

inline std::string detokenize(const Segment& seg) {
    std::string out;
    for (const Token& t : seg.tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t.surface;
    }
    return out;
}

inline Segment make_segment(std::string_view raw_line) {
    return tokenize(normalize(raw_line));
}

// Reads a UTF-8 text file into lines, accepting LF or CRLF.
inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

// Pairs candidate line i with line i of every reference file. Empty lines are
// kept as empty segments so line alignment is preserved.
inline Corpus load_corpus(const std::string& candidate_path,
                          const std::vector<std::string>& reference_paths) {
    if (reference_paths.empty()) throw config_error("at least one reference file required");
    const std::vector<std::string> cand_lines = read_lines(candidate_path);
    if (cand_lines.empty()) throw input_error("empty candidate file: " + candidate_path);

    std::vector<std::vector<std::string>> ref_lines;
    bool mismatch = false;
    for (const auto& p : reference_paths) {
        ref_lines.push_back(read_lines(p));
        if (ref_lines.back().size() != cand_lines.size()) mismatch = true;
    }
    if (mismatch) {
        std::string msg = "line-count mismatch: " + candidate_path + " has " +
                          std::to_string(cand_lines.size()) + " lines";
        for (std::size_t i = 0; i < reference_paths.size(); ++i)
            msg += "; " + reference_paths[i] + " has " +
                   std::to_string(ref_lines[i].size()) + " lines";
        throw input_error(msg);
    }

    Corpus corpus;
    corpus.n_refs = reference_paths.size();
    for (std::size_t i = 0; i < cand_lines.size(); ++i) {
        EvalUnit unit;
        unit.line_no = i + 1;
        unit.candidate = make_segment(cand_lines[i]);
        for (const auto& rl : ref_lines) unit.references.push_back(make_segment(rl[i]));
        corpus.units.push_back(std::move(unit));
    }
    return corpus;
}

}  // namespace hindeval
