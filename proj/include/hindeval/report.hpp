#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hindeval/align.hpp"
#include "hindeval/error.hpp"
#include "hindeval/hindi.hpp"
#include "hindeval/ngram.hpp"
#include "hindeval/text.hpp"

namespace hindeval {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kTokenizerVersion = "hindeval-tok-1";

struct HumanRating {
    std::size_t line_no = 0;  // 1-based unit line
    int rating = 0;           // 1..5
};

enum class HumanMapping { mean_over_5, shifted_quarter };  // mean/5 or (mean-1)/4

inline std::vector<HumanRating> load_ratings(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open ratings file: " + path);
    std::vector<HumanRating> out;
    std::set<std::size_t> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw input_error(path + ":" + std::to_string(line_no) +
                              ": expected 'line_no<TAB>rating'");
        std::size_t unit_line;
        int rating;
        try {
            unit_line = std::stoull(line.substr(0, tab));
            rating = std::stoi(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw input_error(path + ":" + std::to_string(line_no) + ": non-numeric field");
        }
        if (rating < 1 || rating > 5)
            throw input_error(path + ":" + std::to_string(line_no) +
                              ": rating must be in 1..5, got " + std::to_string(rating));
        if (!seen.insert(unit_line).second)
            throw input_error(path + ":" + std::to_string(line_no) +
                              ": duplicate rating for line " + std::to_string(unit_line));
        out.push_back({unit_line, rating});
    }
    return out;
}

// Maps the 1..5 rating scale to [0,1]. Undefined for an empty list.
inline std::optional<double> normalize_human(const std::vector<HumanRating>& ratings,
                                             HumanMapping mapping = HumanMapping::mean_over_5) {
    if (ratings.empty()) return std::nullopt;
    double sum = 0.0;
    for (const HumanRating& r : ratings) sum += r.rating;
    const double mean = sum / static_cast<double>(ratings.size());
    return mapping == HumanMapping::mean_over_5 ? mean / 5.0 : (mean - 1.0) / 4.0;
}

// -------- Spearman rank correlation --------

namespace detail {

inline std::vector<double> average_ranks(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace detail

// Spearman coefficient with average-rank ties; undefined below two points or
// when either vector is constant.
inline std::optional<double> rank_correlation(const std::vector<double>& metric_scores,
                                              const std::vector<double>& human_scores) {
    if (metric_scores.size() != human_scores.size())
        throw config_error("rank_correlation: size mismatch");
    const std::size_t n = metric_scores.size();
    if (n < 2) return std::nullopt;
    const auto ra = detail::average_ranks(metric_scores);
    const auto rb = detail::average_ranks(human_scores);
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= n;
    mb /= n;
    double num = 0.0, da = 0.0, db = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (ra[i] - ma) * (rb[i] - mb);
        da += (ra[i] - ma) * (ra[i] - ma);
        db += (rb[i] - mb) * (rb[i] - mb);
    }
    if (da == 0.0 || db == 0.0) return std::nullopt;
    return num / std::sqrt(da * db);
}

// -------- metric configuration and scoring --------

struct MetricConfig {
    enum class Kind { bleu, meteor, meteor_hindi };
    Kind kind = Kind::bleu;
    int max_n = 4;
    std::vector<double> weights;  // empty = uniform
    Smoothing smoothing = Smoothing::none;
    MeteorConfig meteor;

    std::string name() const {
        switch (kind) {
            case Kind::bleu: return "bleu";
            case Kind::meteor: return "meteor";
            case Kind::meteor_hindi: return "meteor-hindi";
        }
        return "?";
    }

    static std::optional<Kind> parse_kind(const std::string& s) {
        if (s == "bleu") return Kind::bleu;
        if (s == "meteor") return Kind::meteor;
        if (s == "meteor-hindi") return Kind::meteor_hindi;
        return std::nullopt;
    }
};

inline double score_corpus(const Corpus& corpus, const MetricConfig& mc,
                           const ResourceSet& rs = {}) {
    switch (mc.kind) {
        case MetricConfig::Kind::bleu:
            return bleu_corpus(corpus, mc.max_n, mc.weights, mc.smoothing).score;
        case MetricConfig::Kind::meteor:
            return meteor_corpus(corpus, mc.meteor, rs).score;
        case MetricConfig::Kind::meteor_hindi:
            return meteor_hindi_corpus(corpus, mc.meteor, rs).score;
    }
    return 0.0;
}

struct ComparisonRow {
    std::string metric;
    double score = 0.0;
    nlohmann::json config;  // exact configuration that produced the score
};

// One row per metric plus an optional Human row, sorted ascending by score.
inline std::vector<ComparisonRow> compare_metrics(
    const Corpus& corpus, const std::vector<MetricConfig>& metrics,
    const std::vector<HumanRating>& ratings = {}, const ResourceSet& rs = {},
    HumanMapping mapping = HumanMapping::mean_over_5);

struct EngineResult {
    std::string label;
    double score = 0.0;
    std::optional<double> human;
};

struct EngineInput {
    std::string label;
    Corpus corpus;  // candidate vs the shared references
    std::optional<double> human;
};

// Per metric: engines sorted descending by corpus score, ties broken by label.
inline std::map<std::string, std::vector<EngineResult>> rank_engines(
    const std::vector<EngineInput>& engines, const std::vector<MetricConfig>& metrics,
    const ResourceSet& rs = {}) {
    if (engines.size() < 2) throw config_error("ranking needs at least 2 engines");
    std::map<std::string, std::vector<EngineResult>> out;
    for (const MetricConfig& mc : metrics) {
        std::vector<EngineResult> rows;
        for (const EngineInput& e : engines)
            rows.push_back({e.label, score_corpus(e.corpus, mc, rs), e.human});
        std::sort(rows.begin(), rows.end(), [](const EngineResult& a, const EngineResult& b) {
            if (a.score != b.score) return a.score > b.score;
            return a.label < b.label;
        });
        out[mc.name()] = std::move(rows);
    }
    return out;
}

// -------- report assembly --------

namespace detail {

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return fnv1a_hex(data);
}

}  // namespace detail

inline nlohmann::json metric_config_json(const MetricConfig& mc) {
    nlohmann::json j;
    j["metric"] = mc.name();
    j["tokenizer"] = kTokenizerVersion;
    if (mc.kind == MetricConfig::Kind::bleu) {
        j["max_n"] = mc.max_n;
        j["weights"] = mc.weights.empty() ? detail::uniform_weights(mc.max_n) : mc.weights;
        j["smoothing"] = mc.smoothing == Smoothing::none ? "none" : "add-one-high-order";
    } else {
        const MeteorConfig& m = mc.meteor;
        j["fmean"] = m.fmean_mode == MeteorConfig::FMean::recall_weighted ? "recall-weighted"
                                                                          : "harmonic";
        j["gamma"] = m.gamma;
        j["beta"] = m.beta;
        std::vector<std::string> stages{"exact"};
        if (m.enable_stem) stages.push_back("stem");
        if (m.enable_synonym) stages.push_back("synonym");
        if (mc.kind == MetricConfig::Kind::meteor_hindi) {
            stages.push_back("lwg");
            stages.push_back("pos");
            j["lambda"] = m.clause_lambda;
            j["verb_tag_prefix"] = m.verb_tag_prefix;
        }
        j["stages"] = stages;
    }
    return j;
}

inline nlohmann::json resources_json(const std::string& stem_path,
                                     const std::string& synset_path,
                                     const std::string& pos_path,
                                     const std::string& function_word_path) {
    nlohmann::json j;
    auto add = [&](const char* key, const std::string& path) {
        if (path.empty()) {
            j[key] = nullptr;
        } else {
            j[key] = {{"path", path}, {"fnv1a64", detail::file_hash(path)}};
        }
    };
    add("stems", stem_path);
    add("synsets", synset_path);
    add("pos", pos_path);
    add("function_words", function_word_path);
    return j;
}

inline std::vector<ComparisonRow> compare_metrics(const Corpus& corpus,
                                                  const std::vector<MetricConfig>& metrics,
                                                  const std::vector<HumanRating>& ratings,
                                                  const ResourceSet& rs,
                                                  HumanMapping mapping) {
    std::vector<ComparisonRow> rows;
    for (const MetricConfig& mc : metrics)
        rows.push_back({mc.name(), score_corpus(corpus, mc, rs), metric_config_json(mc)});
    if (!ratings.empty()) {
        nlohmann::json cfg;
        cfg["metric"] = "human";
        cfg["mapping"] = mapping == HumanMapping::mean_over_5 ? "mean/5" : "(mean-1)/4";
        rows.push_back({"human", *normalize_human(ratings, mapping), cfg});
    }
    std::sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
        if (a.score != b.score) return a.score < b.score;
        return a.metric < b.metric;
    });
    return rows;
}

}  // namespace hindeval
