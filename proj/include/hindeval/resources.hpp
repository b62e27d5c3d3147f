#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hindeval/error.hpp"
#include "hindeval/unicode.hpp"

namespace hindeval {

// Pluggable lexical resources backing the stem / synonym / LWG / POS matcher
// stages. All keys are NFC-normalized. Absent files leave the corresponding
// table empty and set its "missing" flag; matchers then degrade gracefully.
struct ResourceSet {
    std::unordered_map<std::string, std::string> stems;
    std::vector<std::vector<std::string>> synsets;
    std::unordered_map<std::string, std::vector<std::size_t>> synset_index;
    std::unordered_map<std::string, std::string> pos;
    std::unordered_set<std::string> function_words;

    bool stems_missing = true;
    bool synsets_missing = true;
    bool pos_missing = true;
    bool function_words_missing = true;

    bool all_missing() const {
        return stems_missing && synsets_missing && pos_missing && function_words_missing;
    }

    // Table lookup with identity fallback.
    const std::string& stem_of(const std::string& surface) const {
        auto it = stems.find(surface);
        return it == stems.end() ? surface : it->second;
    }

    bool are_synonyms(const std::string& a, const std::string& b) const {
        auto ia = synset_index.find(a);
        if (ia == synset_index.end()) return false;
        auto ib = synset_index.find(b);
        if (ib == synset_index.end()) return false;
        for (std::size_t sa : ia->second)
            for (std::size_t sb : ib->second)
                if (sa == sb) return true;
        return false;
    }

    bool is_function_word(const std::string& surface) const {
        return function_words.contains(surface);
    }

    // Empty string when untagged.
    std::string pos_tag(const std::string& surface) const {
        auto it = pos.find(surface);
        return it == pos.end() ? std::string() : it->second;
    }
};

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline void load_tsv_map(const std::string& path,
                         std::unordered_map<std::string, std::string>& out,
                         const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + std::string(what) + " file: " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
            throw input_error(path + ":" + std::to_string(line_no) +
                              ": expected 'surface<TAB>value'");
        std::string key = normalize(line.substr(0, tab));
        std::string value = normalize(line.substr(tab + 1));
        auto [it, inserted] = out.emplace(key, value);
        if (!inserted && it->second != value)
            throw input_error(path + ":" + std::to_string(line_no) +
                              ": duplicate key '" + key + "' with conflicting value");
    }
}

}  // namespace detail

// Any path may be empty, meaning "no such resource".
inline ResourceSet load_resources(const std::string& stem_path,
                                  const std::string& synset_path,
                                  const std::string& pos_path,
                                  const std::string& function_word_path) {
    ResourceSet rs;
    if (!stem_path.empty()) {
        detail::load_tsv_map(stem_path, rs.stems, "stem");
        rs.stems_missing = false;
    }
    if (!synset_path.empty()) {
        std::ifstream in(synset_path, std::ios::binary);
        if (!in) throw input_error("cannot open synset file: " + synset_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (detail::is_comment_or_blank(line)) continue;
            std::istringstream ss(line);
            std::vector<std::string> members;
            std::unordered_set<std::string> seen;
            std::string w;
            while (ss >> w) {
                std::string norm = normalize(w);
                if (seen.insert(norm).second) members.push_back(std::move(norm));
            }
            if (members.size() < 2)
                throw input_error(synset_path + ":" + std::to_string(line_no) +
                                  ": synset needs at least two members");
            const std::size_t id = rs.synsets.size();
            for (const auto& m : members) rs.synset_index[m].push_back(id);
            rs.synsets.push_back(std::move(members));
        }
        rs.synsets_missing = false;
    }
    if (!pos_path.empty()) {
        detail::load_tsv_map(pos_path, rs.pos, "POS");
        rs.pos_missing = false;
    }
    if (!function_word_path.empty()) {
        std::ifstream in(function_word_path, std::ios::binary);
        if (!in) throw input_error("cannot open function-word file: " + function_word_path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (detail::is_comment_or_blank(line)) continue;
            rs.function_words.insert(normalize(line));
        }
        rs.function_words_missing = false;
    }
    return rs;
}

}  // namespace hindeval
