// Independent brute-force oracles used by the unit and acceptance suites.
// These deliberately avoid the library's own matching code paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hindeval/text.hpp"

namespace oracle {

// Clipped n-gram matching by explicit occurrence consumption: every candidate
// n-gram occurrence consumes one occurrence from a per-gram bank holding the
// maximum reference count.
inline std::int64_t clipped_matches_consuming(
    const hindeval::Segment& cand, const std::vector<hindeval::Segment>& refs, int n) {
    auto grams = [&](const hindeval::Segment& s) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i + n <= s.size(); ++i) {
            std::string g;
            for (int k = 0; k < n; ++k) {
                g += s.surface(i + k);
                g.push_back('\x1f');
            }
            out.push_back(g);
        }
        return out;
    };
    std::map<std::string, std::int64_t> bank;
    for (const auto& r : refs) {
        std::map<std::string, std::int64_t> counts;
        for (const auto& g : grams(r)) ++counts[g];
        for (const auto& [g, c] : counts)
            if (c > bank[g]) bank[g] = c;
    }
    std::int64_t matched = 0;
    for (const auto& g : grams(cand)) {
        auto it = bank.find(g);
        if (it != bank.end() && it->second > 0) {
            --it->second;
            ++matched;
        }
    }
    return matched;
}

struct MatchingResult {
    std::vector<std::pair<int, int>> pairs;  // sorted by cand index
    int crossings = 0;
};

// Exhaustive search over every injective matching drawn from `pairs`:
// maximum cardinality, then minimal crossings, then lexicographically
// smallest pair list. Crossings recomputed from scratch per solution.
inline MatchingResult exhaustive_best_matching(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> cand_ids;
    std::vector<std::vector<int>> adj;
    for (const auto& [i, j] : pairs) {
        if (cand_ids.empty() || cand_ids.back() != i) {
            cand_ids.push_back(i);
            adj.emplace_back();
        }
        adj.back().push_back(j);
    }

    MatchingResult best;
    bool have = false;
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> ref_used_flag(1024, false);

    auto crossings_of = [](const std::vector<std::pair<int, int>>& m) {
        int c = 0;
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b)
                if ((m[a].first - m[b].first) * (m[a].second - m[b].second) < 0) ++c;
        return c;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cand_ids.size()) {
            const int cr = crossings_of(cur);
            if (!have || cur.size() > best.pairs.size() ||
                (cur.size() == best.pairs.size() &&
                 (cr < best.crossings || (cr == best.crossings && cur < best.pairs)))) {
                best.pairs = cur;
                best.crossings = cr;
                have = true;
            }
            return;
        }
        for (int j : adj[idx]) {
            if (ref_used_flag[j]) continue;
            cur.emplace_back(cand_ids[idx], j);
            ref_used_flag[j] = true;
            rec(idx + 1);
            ref_used_flag[j] = false;
            cur.pop_back();
        }
        rec(idx + 1);
    };
    rec(0);
    return best;
}

// Deterministic random segments over a small alphabet.
inline hindeval::Segment random_segment(std::mt19937& rng, int max_len = 8,
                                        int alphabet = 5, int min_len = 1) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
    const int len = len_dist(rng);
    std::string text;
    for (int i = 0; i < len; ++i) {
        if (i) text.push_back(' ');
        const int s = sym_dist(rng);
        if (s < 26) {
            text.push_back(static_cast<char>('a' + s));
        } else {
            text.push_back(static_cast<char>('a' + s / 26 - 1));
            text.push_back(static_cast<char>('a' + s % 26));
        }
    }
    return hindeval::tokenize(text);
}

inline hindeval::EvalUnit random_unit(std::mt19937& rng, int n_refs = 1, int max_len = 8,
                                      int alphabet = 5) {
    hindeval::EvalUnit unit;
    unit.candidate = random_segment(rng, max_len, alphabet);
    for (int r = 0; r < n_refs; ++r)
        unit.references.push_back(random_segment(rng, max_len, alphabet));
    unit.line_no = 1;
    return unit;
}

}  // namespace oracle
