#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hindeval/error.hpp"
#include "hindeval/text.hpp"

namespace hindeval {

struct NGramCounts {
    int order = 1;
    std::unordered_map<std::string, std::int64_t> counts;  // joined key -> occurrences

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [k, c] : counts) t += c;
        return t;
    }
};

struct PrecisionStat {
    int order = 1;
    std::int64_t matched = 0;
    std::int64_t total = 0;
    bool defined() const { return total > 0; }
    double value() const { return static_cast<double>(matched) / static_cast<double>(total); }
};

enum class Smoothing { none, add_one_high_order };

struct BleuScore {
    int max_n = 4;
    std::vector<double> weights;
    std::vector<PrecisionStat> precisions;  // one per n, 1..max_n
    double bp = 1.0;
    std::int64_t cand_len = 0;  // c
    std::int64_t ref_len = 0;   // effective r
    double score = 0.0;
    bool has_undefined_orders = false;  // some order had zero candidate n-grams
};

namespace detail {
// Tokens never contain whitespace, so '\x1f' join keys are collision-free.
inline std::string ngram_key(const Segment& seg, std::size_t start, int n) {
    std::string key = seg.surface(start);
    for (int k = 1; k < n; ++k) {
        key.push_back('\x1f');
        key += seg.surface(start + k);
    }
    return key;
}
}  // namespace detail

inline NGramCounts extract_ngrams(const Segment& seg, int n) {
    if (n < 1) throw config_error("n-gram order must be >= 1");
    NGramCounts out;
    out.order = n;
    if (seg.size() < static_cast<std::size_t>(n)) return out;
    for (std::size_t i = 0; i + n <= seg.size(); ++i)
        ++out.counts[detail::ngram_key(seg, i, n)];
    return out;
}

// Clipped matching: each candidate n-gram is credited at most
// min(candidate count, max reference count) times.
inline std::int64_t clipped_matches(const NGramCounts& cand,
                                    const std::vector<NGramCounts>& refs) {
    std::int64_t matched = 0;
    for (const auto& r : refs)
        if (r.order != cand.order) throw config_error("n-gram order mismatch");
    for (const auto& [key, c] : cand.counts) {
        std::int64_t clip = 0;
        for (const auto& r : refs) {
            auto it = r.counts.find(key);
            if (it != r.counts.end()) clip = std::max(clip, it->second);
        }
        matched += std::min(c, clip);
    }
    return matched;
}

namespace detail {

// Reference length closest to candidate length; ties go to the shorter.
inline std::int64_t effective_ref_len(const EvalUnit& unit) {
    const auto c = static_cast<std::int64_t>(unit.candidate.size());
    std::int64_t best = static_cast<std::int64_t>(unit.references[0].size());
    for (const Segment& r : unit.references) {
        const auto rl = static_cast<std::int64_t>(r.size());
        const auto d = std::llabs(rl - c), bd = std::llabs(best - c);
        if (d < bd || (d == bd && rl < best)) best = rl;
    }
    return best;
}

struct BleuAccum {
    std::vector<PrecisionStat> precisions;
    std::int64_t cand_len = 0;
    std::int64_t ref_len = 0;
};

inline void accumulate_unit(BleuAccum& acc, const EvalUnit& unit, int max_n) {
    acc.cand_len += static_cast<std::int64_t>(unit.candidate.size());
    acc.ref_len += effective_ref_len(unit);
    for (int n = 1; n <= max_n; ++n) {
        NGramCounts cand = extract_ngrams(unit.candidate, n);
        std::vector<NGramCounts> refs;
        refs.reserve(unit.references.size());
        for (const Segment& r : unit.references) refs.push_back(extract_ngrams(r, n));
        acc.precisions[n - 1].matched += clipped_matches(cand, refs);
        acc.precisions[n - 1].total += cand.total();
    }
}

inline BleuScore compose_bleu(const BleuAccum& acc, int max_n,
                              const std::vector<double>& weights, Smoothing smoothing) {
    BleuScore out;
    out.max_n = max_n;
    out.weights = weights;
    out.precisions = acc.precisions;
    out.cand_len = acc.cand_len;
    out.ref_len = acc.ref_len;

    if (acc.cand_len == 0) {
        out.bp = 0.0;
        out.score = 0.0;
        return out;
    }
    out.bp = acc.cand_len >= acc.ref_len
                 ? 1.0
                 : std::exp(1.0 - static_cast<double>(acc.ref_len) / acc.cand_len);

    // Log-domain weighted geometric mean; undefined orders (no candidate
    // n-grams of that length anywhere) are dropped with a warning flag and
    // the remaining weights renormalized.
    double log_sum = 0.0;
    double weight_sum = 0.0;
    bool zero = false;
    for (int n = 1; n <= max_n; ++n) {
        if (weights[n - 1] == 0.0) continue;
        const PrecisionStat& p = acc.precisions[n - 1];
        if (!p.defined()) {
            out.has_undefined_orders = true;
            continue;
        }
        double num = static_cast<double>(p.matched);
        double den = static_cast<double>(p.total);
        if (smoothing == Smoothing::add_one_high_order && n >= 2) {
            num += 1.0;
            den += 1.0;
        }
        if (num == 0.0) {
            zero = true;
            break;
        }
        log_sum += weights[n - 1] * std::log(num / den);
        weight_sum += weights[n - 1];
    }
    if (zero || weight_sum == 0.0) {
        out.score = 0.0;
    } else {
        out.score = out.bp * std::exp(log_sum / weight_sum);
    }
    return out;
}

inline std::vector<double> uniform_weights(int max_n) {
    return std::vector<double>(max_n, 1.0 / max_n);
}

inline void check_weights(int max_n, const std::vector<double>& w) {
    if (max_n < 1) throw config_error("BLEU max_n must be >= 1");
    if (static_cast<int>(w.size()) != max_n)
        throw config_error("BLEU weight count must equal max_n");
    double s = 0.0;
    for (double x : w) s += x;
    if (std::abs(s - 1.0) > 1e-9) throw config_error("BLEU weights must sum to 1");
}

}  // namespace detail

inline double brevity_penalty(std::int64_t cand_len, std::int64_t ref_len) {
    if (cand_len == 0) return 0.0;
    if (cand_len >= ref_len) return 1.0;
    return std::exp(1.0 - static_cast<double>(ref_len) / cand_len);
}

// Corpus-level modified n-gram precision for a single order.
inline PrecisionStat modified_precision(const Corpus& corpus, int n) {
    if (corpus.empty()) throw config_error("empty corpus");
    detail::BleuAccum acc;
    acc.precisions.resize(n);
    for (int k = 1; k <= n; ++k) acc.precisions[k - 1].order = k;
    for (const EvalUnit& unit : corpus.units) detail::accumulate_unit(acc, unit, n);
    return acc.precisions[n - 1];
}

inline BleuScore bleu_corpus(const Corpus& corpus, int max_n = 4,
                             std::vector<double> weights = {},
                             Smoothing smoothing = Smoothing::none) {
    if (corpus.empty()) throw config_error("empty corpus");
    if (weights.empty()) weights = detail::uniform_weights(max_n);
    detail::check_weights(max_n, weights);
    detail::BleuAccum acc;
    acc.precisions.resize(max_n);
    for (int n = 1; n <= max_n; ++n) acc.precisions[n - 1].order = n;
    for (const EvalUnit& unit : corpus.units) detail::accumulate_unit(acc, unit, max_n);
    return detail::compose_bleu(acc, max_n, weights, smoothing);
}

inline BleuScore bleu_sentence(const EvalUnit& unit, int max_n = 4,
                               std::vector<double> weights = {},
                               Smoothing smoothing = Smoothing::none) {
    if (weights.empty()) weights = detail::uniform_weights(max_n);
    detail::check_weights(max_n, weights);
    detail::BleuAccum acc;
    acc.precisions.resize(max_n);
    for (int n = 1; n <= max_n; ++n) acc.precisions[n - 1].order = n;
    detail::accumulate_unit(acc, unit, max_n);
    return detail::compose_bleu(acc, max_n, weights, smoothing);
}

// Per-order scores with the weight concentrated at each single n; reproduces
// the n-gram degradation curve.
inline std::vector<BleuScore> ngram_curve(const Corpus& corpus, int max_n = 4) {
    if (corpus.empty()) throw config_error("empty corpus");
    std::vector<BleuScore> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<double> w(max_n, 0.0);
        w[n - 1] = 1.0;
        out.push_back(bleu_corpus(corpus, max_n, w, Smoothing::none));
    }
    return out;
}

inline std::vector<BleuScore> ngram_curve(const EvalUnit& unit, int max_n = 4) {
    Corpus c;
    c.units.push_back(unit);
    c.n_refs = unit.references.size();
    return ngram_curve(c, max_n);
}

}  // namespace hindeval
