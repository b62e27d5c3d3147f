#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hindeval/align.hpp"
#include "hindeval/resources.hpp"
#include "hindeval/text.hpp"

namespace hindeval {

// A content word plus the function words (postpositions, auxiliaries)
// immediately following it. Leading function words with no preceding content
// word form standalone headless groups.
struct LocalWordGroup {
    int content = -1;           // token index; -1 when headless
    std::vector<int> attached;  // function-word token indices, in order

    bool headless() const { return content < 0; }
    std::size_t size() const { return attached.size() + (headless() ? 0 : 1); }
};

struct Clause {
    std::size_t begin = 0;  // token index range [begin, end)
    std::size_t end = 0;
    bool contains_verb = false;
};

// Left-to-right scan: each content word opens a group, following function
// words attach to it. Groups partition the segment's tokens.
inline std::vector<LocalWordGroup> lwg_split(const Segment& seg, const ResourceSet& rs) {
    std::vector<LocalWordGroup> groups;
    for (int i = 0; i < static_cast<int>(seg.size()); ++i) {
        if (rs.is_function_word(seg.surface(i))) {
            if (groups.empty() || groups.back().headless()) {
                groups.push_back({-1, {i}});  // headless leading function word
            } else {
                groups.back().attached.push_back(i);
            }
        } else {
            groups.push_back({i, {}});
        }
    }
    return groups;
}

namespace detail {

// Two groups match when their content stems are equal (or both are headless)
// and their attached function-word multisets are equal.
inline bool lwg_groups_match(const Segment& cand, const Segment& ref,
                             const LocalWordGroup& a, const LocalWordGroup& b,
                             const ResourceSet& rs) {
    if (a.headless() != b.headless()) return false;
    if (a.attached.size() != b.attached.size()) return false;
    if (!a.headless() &&
        rs.stem_of(cand.surface(a.content)) != rs.stem_of(ref.surface(b.content)))
        return false;
    std::vector<std::string> aw, bw;
    for (int i : a.attached) aw.push_back(cand.surface(i));
    for (int j : b.attached) bw.push_back(ref.surface(j));
    std::sort(aw.begin(), aw.end());
    std::sort(bw.begin(), bw.end());
    return aw == bw;
}

inline bool group_free(const LocalWordGroup& g, const std::vector<bool>& used) {
    if (!g.headless() && used[g.content]) return false;
    for (int i : g.attached)
        if (used[i]) return false;
    return true;
}

}  // namespace detail

// Candidate token pairs implied by matching local word groups whose members
// are all still unmapped. A group match emits the content pair plus one pair
// per attached function word (paired by surface).
inline std::vector<std::pair<int, int>> lwg_match(const Segment& cand, const Segment& ref,
                                                  const std::vector<bool>& cand_used,
                                                  const std::vector<bool>& ref_used,
                                                  const ResourceSet& rs) {
    std::vector<std::pair<int, int>> out;
    const auto cand_groups = lwg_split(cand, rs);
    const auto ref_groups = lwg_split(ref, rs);
    for (const LocalWordGroup& cg : cand_groups) {
        if (!detail::group_free(cg, cand_used)) continue;
        for (const LocalWordGroup& rg : ref_groups) {
            if (!detail::group_free(rg, ref_used)) continue;
            if (!detail::lwg_groups_match(cand, ref, cg, rg, rs)) continue;
            if (!cg.headless()) out.emplace_back(cg.content, rg.content);
            // Pair attached words by surface; multisets are equal here.
            auto ca = cg.attached;
            auto ra = rg.attached;
            auto by_surface_c = [&](int x, int y) { return cand.surface(x) < cand.surface(y); };
            auto by_surface_r = [&](int x, int y) { return ref.surface(x) < ref.surface(y); };
            std::sort(ca.begin(), ca.end(), by_surface_c);
            std::sort(ra.begin(), ra.end(), by_surface_r);
            for (std::size_t k = 0; k < ca.size(); ++k) out.emplace_back(ca[k], ra[k]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<std::pair<int, int>> lwg_stage_pairs(const Segment& cand,
                                                        const Segment& ref,
                                                        const std::vector<bool>& cand_used,
                                                        const std::vector<bool>& ref_used,
                                                        const ResourceSet& rs,
                                                        bool* resource_missing) {
    if (rs.function_words_missing && resource_missing) *resource_missing = true;
    return lwg_match(cand, ref, cand_used, ref_used, rs);
}

// Pairs of still-unmapped tokens carrying the same POS tag; untagged tokens
// are skipped.
inline std::vector<std::pair<int, int>> pos_match(const Segment& cand, const Segment& ref,
                                                  const std::vector<bool>& cand_used,
                                                  const std::vector<bool>& ref_used,
                                                  const ResourceSet& rs) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(cand.size()); ++i) {
        if (cand_used[i]) continue;
        const std::string ct = rs.pos_tag(cand.surface(i));
        if (ct.empty()) continue;
        for (int j = 0; j < static_cast<int>(ref.size()); ++j) {
            if (ref_used[j]) continue;
            if (rs.pos_tag(ref.surface(j)) == ct) out.emplace_back(i, j);
        }
    }
    return out;
}

inline std::vector<std::pair<int, int>> pos_stage_pairs(const Segment& cand,
                                                        const Segment& ref,
                                                        const std::vector<bool>& cand_used,
                                                        const std::vector<bool>& ref_used,
                                                        const ResourceSet& rs,
                                                        bool* resource_missing) {
    if (rs.pos_missing) {
        if (resource_missing) *resource_missing = true;
        return {};
    }
    return pos_match(cand, ref, cand_used, ref_used, rs);
}

namespace detail {

inline bool is_verb_tag(const std::string& tag, const std::string& prefix) {
    return !tag.empty() && tag.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace detail

// Divides the segment at verb-tagged tokens and dandas. A verb immediately
// followed by a danda ends its clause at the danda, so the danda stays with
// the clause it closes. No verbs and no dandas -> one clause.
inline std::vector<Clause> clause_split(const Segment& seg, const ResourceSet& rs,
                                        const std::string& verb_tag_prefix = "V") {
    std::vector<Clause> out;
    if (seg.empty()) return out;
    Clause cur{0, 0, false};
    for (std::size_t i = 0; i < seg.size(); ++i) {
        const std::string& surf = seg.surface(i);
        const bool danda = (surf == utf8_encode({kDanda}) || surf == utf8_encode({kDoubleDanda}));
        const bool verb =
            !rs.pos_missing && detail::is_verb_tag(rs.pos_tag(surf), verb_tag_prefix);
        cur.end = i + 1;
        cur.contains_verb = cur.contains_verb || verb;
        const bool next_is_danda =
            i + 1 < seg.size() && (seg.surface(i + 1) == utf8_encode({kDanda}) ||
                                   seg.surface(i + 1) == utf8_encode({kDoubleDanda}));
        if (danda || (verb && !next_is_danda)) {
            out.push_back(cur);
            cur = Clause{i + 1, i + 1, false};
        }
    }
    if (cur.end > cur.begin) out.push_back(cur);
    return out;
}

// Fraction of candidate clauses whose content is matched: a clause counts when
// at least half of its tokens are aligned and every verb in it is aligned.
inline double clause_match_ratio(const EvalUnit& unit, const Alignment& alignment,
                                 const ResourceSet& rs,
                                 const std::string& verb_tag_prefix = "V") {
    const Segment& cand = unit.candidate;
    const auto clauses = clause_split(cand, rs, verb_tag_prefix);
    if (clauses.empty()) return 0.0;
    std::vector<bool> aligned(cand.size(), false);
    for (const AlignedPair& p : alignment.pairs) aligned[p.cand] = true;
    std::size_t matched = 0;
    for (const Clause& cl : clauses) {
        std::size_t hit = 0;
        bool verbs_ok = true;
        for (std::size_t i = cl.begin; i < cl.end; ++i) {
            if (aligned[i]) ++hit;
            if (!rs.pos_missing &&
                detail::is_verb_tag(rs.pos_tag(cand.surface(i)), verb_tag_prefix) &&
                !aligned[i])
                verbs_ok = false;
        }
        if (verbs_ok && 2 * hit >= (cl.end - cl.begin)) ++matched;
    }
    return static_cast<double>(matched) / static_cast<double>(clauses.size());
}

inline MeteorConfig hindi_config(MeteorConfig cfg) {
    cfg.enable_lwg = true;
    cfg.enable_pos = true;
    return cfg;
}

// Full Hindi pipeline: Exact -> Stem -> Synonym -> LWG -> POS, plus a clause
// match diagnostic blended into the score with weight clause_lambda
// (default 0). Missing resource tables degrade each stage independently, down
// to the base METEOR pipeline when nothing is loaded.
inline MeteorScore meteor_hindi(const EvalUnit& unit, const MeteorConfig& config = {},
                                const ResourceSet& rs = {}) {
    const MeteorConfig cfg = hindi_config(config);
    MeteorScore s = meteor_unit(unit, cfg, rs);
    s.clause_ratio = s.degenerate
                         ? 0.0
                         : clause_match_ratio(unit, s.alignment, rs, cfg.verb_tag_prefix);
    if (cfg.clause_lambda != 0.0)
        s.score = s.score * (1.0 - cfg.clause_lambda) + s.clause_ratio * cfg.clause_lambda;
    return s;
}

inline MeteorScore meteor_hindi_corpus(const Corpus& corpus,
                                       const MeteorConfig& config = {},
                                       const ResourceSet& rs = {}) {
    if (corpus.empty()) throw config_error("empty corpus");
    const MeteorConfig cfg = hindi_config(config);
    MeteorScore agg;
    double ratio_sum = 0.0;
    for (const EvalUnit& unit : corpus.units) {
        MeteorScore s = meteor_hindi(unit, config, rs);
        agg.matches += s.matches;
        agg.cand_len += s.cand_len;
        agg.ref_len += s.ref_len;
        agg.chunks += s.chunks;
        for (std::size_t k = 0; k < kNumStages; ++k)
            agg.stage_histogram[k] += s.stage_histogram[k];
        agg.resource_missing = agg.resource_missing || s.resource_missing;
        ratio_sum += s.clause_ratio;
    }
    detail::fill_meteor_stats(agg, cfg);
    agg.clause_ratio = ratio_sum / static_cast<double>(corpus.size());
    if (cfg.clause_lambda != 0.0)
        agg.score = agg.score * (1.0 - cfg.clause_lambda) + agg.clause_ratio * cfg.clause_lambda;
    return agg;
}

}  // namespace hindeval
