#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hindeval/error.hpp"
#include "hindeval/resources.hpp"
#include "hindeval/text.hpp"

namespace hindeval {

// Matcher stages in fixed pipeline order. Base METEOR uses the first three;
// the Hindi extension appends LWG and POS.
enum class MatchStage { exact = 0, stem = 1, synonym = 2, lwg = 3, pos = 4 };
inline constexpr std::size_t kNumStages = 5;

struct AlignedPair {
    int cand = 0;
    int ref = 0;
    MatchStage stage = MatchStage::exact;

    bool operator==(const AlignedPair&) const = default;
};

// Injective both ways; pairs sorted by candidate index.
struct Alignment {
    std::vector<AlignedPair> pairs;
    std::size_t ref_choice = 0;

    std::size_t size() const { return pairs.size(); }
};

struct MeteorConfig {
    bool enable_stem = true;
    bool enable_synonym = true;
    bool enable_lwg = false;
    bool enable_pos = false;

    enum class FMean { recall_weighted, harmonic };
    FMean fmean_mode = FMean::recall_weighted;  // 10PR/(R+9P)

    double gamma = 0.5;  // fragmentation penalty weight
    double beta = 3.0;   // fragmentation penalty exponent

    double clause_lambda = 0.0;        // clause-match blend, meteor_hindi only
    std::string verb_tag_prefix = "V";

    std::vector<MatchStage> stages() const {
        std::vector<MatchStage> s{MatchStage::exact};
        if (enable_stem) s.push_back(MatchStage::stem);
        if (enable_synonym) s.push_back(MatchStage::synonym);
        if (enable_lwg) s.push_back(MatchStage::lwg);
        if (enable_pos) s.push_back(MatchStage::pos);
        return s;
    }
};

struct MeteorScore {
    std::int64_t matches = 0;
    std::int64_t cand_len = 0;
    std::int64_t ref_len = 0;
    std::int64_t chunks = 0;
    double precision = 0.0;
    double recall = 0.0;
    double fmean = 0.0;
    double penalty = 0.0;
    double score = 0.0;
    std::array<std::int64_t, kNumStages> stage_histogram{};
    bool degenerate = false;        // empty candidate or all references empty
    bool resource_missing = false;  // some enabled stage lacked its table
    double clause_ratio = -1.0;     // diagnostic; < 0 when not computed
    Alignment alignment;            // winning alignment (unit-level scoring only)
};

// -------- stage pair generation (exact / stem / synonym) --------

// Candidate pairs a stage considers equivalent, restricted to positions still
// unmapped by earlier stages. Missing resource tables yield no pairs and set
// *resource_missing.
inline std::vector<std::pair<int, int>> match_stage(
    const Segment& cand, const Segment& ref, const std::vector<bool>& cand_used,
    const std::vector<bool>& ref_used, MatchStage stage, const ResourceSet& rs,
    bool* resource_missing = nullptr) {
    std::vector<std::pair<int, int>> out;
    if (stage == MatchStage::stem && rs.stems_missing) {
        if (resource_missing) *resource_missing = true;
        return out;
    }
    if (stage == MatchStage::synonym && rs.synsets_missing) {
        if (resource_missing) *resource_missing = true;
        return out;
    }
    for (int i = 0; i < static_cast<int>(cand.size()); ++i) {
        if (cand_used[i]) continue;
        for (int j = 0; j < static_cast<int>(ref.size()); ++j) {
            if (ref_used[j]) continue;
            const std::string& cs = cand.surface(i);
            const std::string& rjs = ref.surface(j);
            bool hit = false;
            switch (stage) {
                case MatchStage::exact:
                    hit = (cs == rjs);
                    break;
                case MatchStage::stem:
                    hit = (rs.stem_of(cs) == rs.stem_of(rjs));
                    break;
                case MatchStage::synonym:
                    hit = rs.are_synonyms(cs, rjs);
                    break;
                default:
                    throw config_error("match_stage: LWG/POS stages use their own generators");
            }
            if (hit) out.emplace_back(i, j);
        }
    }
    return out;
}

// -------- injective matching with minimal crossings --------

namespace detail {

struct StageSelection {
    std::vector<std::pair<int, int>> pairs;  // sorted by cand index
    int crossings = 0;
};

// Exact search for a maximum-cardinality injective matching with the fewest
// crossings; deterministic lexicographic tie-break. `fixed` holds links
// already committed by earlier stages; crossings against them count too.
// Branch and bound over candidate positions in ascending order: trying refs
// ascending before the skip branch makes the first solution recorded for any
// (size, crossings) value the lexicographically smallest one.
class CrossingMinimizer {
  public:
    CrossingMinimizer(std::vector<std::pair<int, int>> pairs,
                      const std::vector<AlignedPair>& fixed)
        : fixed_(fixed) {
        std::sort(pairs.begin(), pairs.end());
        int max_ref = -1;
        for (const auto& [i, j] : pairs) {
            if (cand_ids_.empty() || cand_ids_.back() != i) {
                cand_ids_.push_back(i);
                adj_.emplace_back();
            }
            adj_.back().push_back(j);
            max_ref = std::max(max_ref, j);
        }
        ref_used_.assign(static_cast<std::size_t>(max_ref) + 1, false);
    }

    StageSelection solve() {
        chosen_.clear();
        best_.pairs.clear();
        best_.crossings = 0;
        have_best_ = false;
        dfs(0, 0);
        return best_;
    }

  private:
    int crossings_with(int i, int j) const {
        int c = 0;
        for (const auto& [ci, cj] : chosen_)
            if ((ci - i) * (cj - j) < 0) ++c;
        for (const AlignedPair& f : fixed_)
            if ((f.cand - i) * (f.ref - j) < 0) ++c;
        return c;
    }

    void record() {
        const auto size = chosen_.size();
        if (!have_best_ || size > best_.pairs.size() ||
            (size == best_.pairs.size() && cur_crossings_ < best_.crossings)) {
            best_.pairs = chosen_;
            best_.crossings = cur_crossings_;
            have_best_ = true;
        }
    }

    void dfs(std::size_t idx, int depth) {
        const std::size_t bound = chosen_.size() + (cand_ids_.size() - idx);
        if (have_best_) {
            if (bound < best_.pairs.size()) return;
            if (bound == best_.pairs.size() && cur_crossings_ >= best_.crossings) return;
        }
        if (idx == cand_ids_.size()) {
            record();
            return;
        }
        const int i = cand_ids_[idx];
        for (int j : adj_[idx]) {
            if (ref_used_[j]) continue;
            const int added = crossings_with(i, j);
            chosen_.emplace_back(i, j);
            ref_used_[j] = true;
            cur_crossings_ += added;
            dfs(idx + 1, depth + 1);
            cur_crossings_ -= added;
            ref_used_[j] = false;
            chosen_.pop_back();
        }
        dfs(idx + 1, depth);  // skip this candidate position
    }

    std::vector<int> cand_ids_;
    std::vector<std::vector<int>> adj_;
    const std::vector<AlignedPair>& fixed_;
    std::vector<std::pair<int, int>> chosen_;
    std::vector<bool> ref_used_;
    int cur_crossings_ = 0;
    StageSelection best_;
    bool have_best_ = false;
};

}  // namespace detail

// Selects the stage's matching over still-unmapped positions: maximum
// cardinality, then minimal crossings, then lexicographically smallest.
inline detail::StageSelection select_stage_matching(
    const std::vector<std::pair<int, int>>& pairs,
    const std::vector<AlignedPair>& fixed) {
    detail::CrossingMinimizer cm(pairs, fixed);
    return cm.solve();
}

// Runs the staged pair sets through selection in pipeline order and merges
// the result into one alignment.
inline Alignment select_alignment(
    const std::vector<std::pair<MatchStage, std::vector<std::pair<int, int>>>>& stagewise,
    std::size_t ref_choice = 0) {
    Alignment out;
    out.ref_choice = ref_choice;
    for (const auto& [stage, pairs] : stagewise) {
        auto sel = select_stage_matching(pairs, out.pairs);
        for (const auto& [i, j] : sel.pairs) out.pairs.push_back({i, j, stage});
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const AlignedPair& a, const AlignedPair& b) { return a.cand < b.cand; });
    return out;
}

// Number of maximal runs of links contiguous in both sentences.
inline std::int64_t count_chunks(const Alignment& alignment) {
    if (alignment.pairs.empty()) return 0;
    std::int64_t chunks = 1;
    for (std::size_t k = 1; k < alignment.pairs.size(); ++k) {
        const AlignedPair& prev = alignment.pairs[k - 1];
        const AlignedPair& cur = alignment.pairs[k];
        if (cur.cand != prev.cand + 1 || cur.ref != prev.ref + 1) ++chunks;
    }
    return chunks;
}

namespace detail {

inline double compute_fmean(double p, double r, MeteorConfig::FMean mode) {
    if (p + r == 0.0) return 0.0;
    if (mode == MeteorConfig::FMean::harmonic) return 2.0 * p * r / (p + r);
    return 10.0 * p * r / (r + 9.0 * p);
}

inline void fill_meteor_stats(MeteorScore& s, const MeteorConfig& cfg) {
    if (s.matches == 0 || s.cand_len == 0 || s.ref_len == 0) {
        s.precision = s.recall = s.fmean = s.penalty = s.score = 0.0;
        return;
    }
    s.precision = static_cast<double>(s.matches) / static_cast<double>(s.cand_len);
    s.recall = static_cast<double>(s.matches) / static_cast<double>(s.ref_len);
    s.fmean = compute_fmean(s.precision, s.recall, cfg.fmean_mode);
    const double frag = static_cast<double>(s.chunks) / static_cast<double>(s.matches);
    s.penalty = cfg.gamma * std::pow(frag, cfg.beta);
    s.score = s.fmean * (1.0 - s.penalty);
}

}  // namespace detail

// Aligns one candidate against one reference through the configured stages.
inline Alignment align_segments(const Segment& cand, const Segment& ref,
                                const MeteorConfig& cfg, const ResourceSet& rs,
                                bool* resource_missing = nullptr);

// Declared in hindi.hpp; generate LWG / POS stage pairs.
std::vector<std::pair<int, int>> lwg_stage_pairs(const Segment& cand, const Segment& ref,
                                                 const std::vector<bool>& cand_used,
                                                 const std::vector<bool>& ref_used,
                                                 const ResourceSet& rs,
                                                 bool* resource_missing);
std::vector<std::pair<int, int>> pos_stage_pairs(const Segment& cand, const Segment& ref,
                                                 const std::vector<bool>& cand_used,
                                                 const std::vector<bool>& ref_used,
                                                 const ResourceSet& rs,
                                                 bool* resource_missing);

inline Alignment align_segments(const Segment& cand, const Segment& ref,
                                const MeteorConfig& cfg, const ResourceSet& rs,
                                bool* resource_missing) {
    Alignment out;
    std::vector<bool> cand_used(cand.size(), false);
    std::vector<bool> ref_used(ref.size(), false);
    for (MatchStage stage : cfg.stages()) {
        std::vector<std::pair<int, int>> pairs;
        switch (stage) {
            case MatchStage::lwg:
                pairs = lwg_stage_pairs(cand, ref, cand_used, ref_used, rs, resource_missing);
                break;
            case MatchStage::pos:
                pairs = pos_stage_pairs(cand, ref, cand_used, ref_used, rs, resource_missing);
                break;
            default:
                pairs = match_stage(cand, ref, cand_used, ref_used, stage, rs,
                                    resource_missing);
                break;
        }
        auto sel = select_stage_matching(pairs, out.pairs);
        for (const auto& [i, j] : sel.pairs) {
            out.pairs.push_back({i, j, stage});
            cand_used[i] = true;
            ref_used[j] = true;
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const AlignedPair& a, const AlignedPair& b) { return a.cand < b.cand; });
    return out;
}

// Scores one unit: aligns against every reference independently and keeps the
// reference with the highest final score (ties go to the earlier reference).
inline MeteorScore meteor_unit(const EvalUnit& unit, const MeteorConfig& cfg = {},
                               const ResourceSet& rs = {}) {
    MeteorScore best;
    best.cand_len = static_cast<std::int64_t>(unit.candidate.size());
    bool any_ref_nonempty = false;
    bool have = false;
    for (std::size_t r = 0; r < unit.references.size(); ++r) {
        const Segment& ref = unit.references[r];
        if (!ref.empty()) any_ref_nonempty = true;
        if (unit.candidate.empty() || ref.empty()) continue;
        MeteorScore s;
        s.cand_len = static_cast<std::int64_t>(unit.candidate.size());
        s.ref_len = static_cast<std::int64_t>(ref.size());
        bool missing = false;
        Alignment a = align_segments(unit.candidate, ref, cfg, rs, &missing);
        a.ref_choice = r;
        s.matches = static_cast<std::int64_t>(a.size());
        s.chunks = count_chunks(a);
        for (const AlignedPair& p : a.pairs)
            ++s.stage_histogram[static_cast<std::size_t>(p.stage)];
        s.resource_missing = missing;
        detail::fill_meteor_stats(s, cfg);
        s.alignment = std::move(a);
        if (!have || s.score > best.score) {
            best = std::move(s);
            have = true;
        }
    }
    if (!have) {
        best.degenerate = unit.candidate.empty() || !any_ref_nonempty;
        best.ref_len = unit.references.empty()
                           ? 0
                           : static_cast<std::int64_t>(unit.references[0].size());
    }
    return best;
}

// Corpus METEOR: match, length, and chunk statistics are summed over units and
// the score recomputed from the sums.
inline MeteorScore meteor_corpus(const Corpus& corpus, const MeteorConfig& cfg = {},
                                 const ResourceSet& rs = {}) {
    if (corpus.empty()) throw config_error("empty corpus");
    MeteorScore agg;
    for (const EvalUnit& unit : corpus.units) {
        MeteorScore s = meteor_unit(unit, cfg, rs);
        agg.matches += s.matches;
        agg.cand_len += s.cand_len;
        agg.ref_len += s.ref_len;
        agg.chunks += s.chunks;
        for (std::size_t k = 0; k < kNumStages; ++k)
            agg.stage_histogram[k] += s.stage_histogram[k];
        agg.resource_missing = agg.resource_missing || s.resource_missing;
    }
    detail::fill_meteor_stats(agg, cfg);
    return agg;
}

}  // namespace hindeval

// Supplies the LWG/POS stage generators referenced by align_segments.
#include "hindeval/hindi.hpp"
