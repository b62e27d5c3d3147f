// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runs against brute-force oracles where the criterion
// demands one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hindeval/hindi.hpp"
#include "hindeval/ngram.hpp"
#include "hindeval/report.hpp"
#include "desk_corpus.hpp"
#include "oracles.hpp"

using namespace hindeval;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EvalUnit make_unit(const std::string& cand, const std::vector<std::string>& refs) {
    EvalUnit u;
    u.candidate = make_segment(cand);
    for (const auto& r : refs) u.references.push_back(make_segment(r));
    u.line_no = 1;
    return u;
}

ResourceSet toy_resources() {
    const std::string d = HINDEVAL_DATA_DIR;
    return load_resources(d + "/stems.tsv", d + "/synsets.txt", d + "/pos.tsv",
                          d + "/function_words.txt");
}

// 1. Aggregate-count arithmetic reproduces the published per-order precisions.
void criterion1() {
    const PrecisionStat rows[] = {{2, 1172, 2549}, {3, 790, 2548}, {4, 356, 2547}};
    const double expect[] = {0.46, 0.31, 0.14};
    bool ok = true;
    for (int i = 0; i < 3; ++i)
        ok = ok && std::abs(rows[i].value() - expect[i]) <= 0.005;
    report(1, "per-order precision arithmetic (1172/2549, 790/2548, 356/2547)", ok);
}

// 2. 100-line identity corpus: BLEU exactly 1, METEOR >= 0.999, under 1 s.
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    Corpus c;
    c.n_refs = 1;
    const char* lines[] = {
        "सीता ने अलमारी में रखा हुआ कटा सेब बड़े आराम से बैठ कर खाया ।",
        "लड़का अपने घर में बैठ कर रोज शाम को एक किताब पढ़ता है ।",
        "राम ने कल सुबह बाजार से बहुत सारे ताजे फल खरीद कर लिया ।",
        "छोटा बच्चा आज स्कूल में अपनी नयी कलम से एक पत्र लिखा ।",
    };
    for (int i = 0; i < 100; ++i) {
        EvalUnit u;
        u.line_no = static_cast<std::size_t>(i) + 1;
        u.candidate = make_segment(lines[i % 4]);
        u.references.push_back(make_segment(lines[i % 4]));
        c.units.push_back(std::move(u));
    }
    const double bleu = bleu_corpus(c, 4).score;
    const double meteor = meteor_corpus(c).score;
    const double secs = elapsed_s(t0);
    char detail[128];
    std::snprintf(detail, sizeof detail, "bleu=%.6f meteor=%.6f %.2fs", bleu, meteor, secs);
    report(2, "identity corpus scores", bleu == 1.0 && meteor >= 0.999 && secs < 1.0,
           detail);
}

// 3. Permuted-sentence curve: order-1 exactly 1, strictly decreasing for
//    n=2..4, matched counts equal to the consuming oracle.
void criterion3() {
    EvalUnit u = make_unit("सीता ने अलमारी में रखा हुआ कटा सेब खाया।",
                           {"अलमारी में रखा कटा हुआ सेब सीता ने खाया।",
                            "अलमारी में रखा हुआ कटा सेब सीता ने खाया।",
                            "रखा हुआ कटा सेब अलमारी में सीता ने खाया।"});
    auto curve = ngram_curve(u, 4);
    bool ok = curve[0].score == 1.0 && curve[1].score > curve[2].score &&
              curve[2].score > curve[3].score;
    Corpus c;
    c.n_refs = 3;
    c.units.push_back(u);
    for (int n = 1; n <= 4 && ok; ++n)
        ok = modified_precision(c, n).matched ==
             oracle::clipped_matches_consuming(u.candidate, u.references, n);
    char detail[128];
    std::snprintf(detail, sizeof detail, "curve %.4f %.4f %.4f %.4f", curve[0].score,
                  curve[1].score, curve[2].score, curve[3].score);
    report(3, "n-gram curve shape on the permuted sentences", ok, detail);
}

// 4. 200 random unit pairs: selection equals exhaustive search, under 30 s.
void criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    int agree = 0;
    const int total = 200;
    for (int it = 0; it < total; ++it) {
        EvalUnit u = oracle::random_unit(rng, 1, 8, 5);
        std::vector<bool> cu(u.candidate.size(), false), ru(u.references[0].size(), false);
        auto pairs = match_stage(u.candidate, u.references[0], cu, ru,
                                 MatchStage::exact, {});
        auto got = select_stage_matching(pairs, {});
        auto want = oracle::exhaustive_best_matching(pairs);
        if (got.pairs.size() == want.pairs.size() && got.crossings == want.crossings)
            ++agree;
    }
    const double secs = elapsed_s(t0);
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d/%d agree, %.2fs", agree, total, secs);
    report(4, "alignment vs exhaustive search", agree == total && secs < 30.0, detail);
}

// 5. The hand fixture (m=6, |c|=8, |r|=10, chunks=3) scores 0.574 +- 0.001.
void criterion5() {
    EvalUnit u = make_unit("w1 w2 q1 w5 w6 q2 w9 w10",
                           {"w1 w2 w3 w4 w5 w6 w7 w8 w9 w10"});
    MeteorScore s = meteor_unit(u);
    const bool stats_ok =
        s.matches == 6 && s.cand_len == 8 && s.ref_len == 10 && s.chunks == 3;
    char detail[64];
    std::snprintf(detail, sizeof detail, "score=%.6f", s.score);
    report(5, "meteor hand fixture", stats_ok && std::abs(s.score - 0.574) <= 0.001,
           detail);
}

// 6. Degradation and stage monotonicity on the 50-unit desk corpus.
void criterion6() {
    ResourceSet rs = toy_resources();
    ResourceSet empty;
    bool degrade_ok = true, monotone_ok = true, strict = false;
    for (const desk::RawUnit& raw : desk::raw_units()) {
        EvalUnit u = make_unit(raw.candidate, {raw.reference});
        MeteorScore hindi_empty = meteor_hindi(u, {}, empty);
        MeteorScore base = meteor_unit(u, {}, empty);
        degrade_ok = degrade_ok && hindi_empty.matches == base.matches &&
                     hindi_empty.chunks == base.chunks &&
                     hindi_empty.precision == base.precision &&
                     hindi_empty.recall == base.recall &&
                     hindi_empty.fmean == base.fmean &&
                     hindi_empty.penalty == base.penalty &&
                     hindi_empty.score == base.score &&
                     hindi_empty.stage_histogram == base.stage_histogram;
        MeteorScore with = meteor_hindi(u, {}, rs);
        monotone_ok = monotone_ok && with.matches >= hindi_empty.matches;
        strict = strict || with.matches > hindi_empty.matches;
    }
    report(6, "degradation bit-for-bit and match monotonicity",
           degrade_ok && monotone_ok && strict);
}

// 7. Desk-corpus qualitative ordering BLEU <= METEOR <= METEOR-Hindi.
void criterion7() {
    Corpus c = desk::build_corpus();
    ResourceSet rs = toy_resources();
    const double bleu = bleu_corpus(c, 4).score;
    const double meteor = meteor_corpus(c, {}, rs).score;
    const double hindi = meteor_hindi_corpus(c, {}, rs).score;
    char detail[96];
    std::snprintf(detail, sizeof detail, "bleu=%.4f meteor=%.4f meteor-hindi=%.4f",
                  bleu, meteor, hindi);
    report(7, "metric ordering on the desk corpus", bleu <= meteor && meteor <= hindi,
           detail);
}

// 8. Property sweep: bounds, brevity penalty, reference monotonicity, unit
//    reorder invariance, report round-trip.
void criterion8() {
    std::mt19937 rng(777);
    bool ok = true;
    for (int it = 0; it < 200 && ok; ++it) {
        EvalUnit u = oracle::random_unit(rng, 1 + it % 3);
        BleuScore b = bleu_sentence(u, 3, {}, Smoothing::add_one_high_order);
        MeteorScore m = meteor_unit(u);
        ok = ok && b.score >= 0.0 && b.score <= 1.0 && m.score >= 0.0 && m.score <= 1.0;
        ok = ok && b.bp <= 1.0 && ((b.bp == 1.0) == (b.cand_len >= b.ref_len));
        // adding a reference never hurts clipped matches
        Segment extra = oracle::random_segment(rng);
        for (int n = 1; n <= 2 && ok; ++n) {
            NGramCounts cand = extract_ngrams(u.candidate, n);
            std::vector<NGramCounts> refs;
            for (const Segment& r : u.references) refs.push_back(extract_ngrams(r, n));
            const auto before = clipped_matches(cand, refs);
            refs.push_back(extract_ngrams(extra, n));
            ok = ok && clipped_matches(cand, refs) >= before;
        }
    }
    // unit reordering leaves corpus scores unchanged
    Corpus c;
    c.n_refs = 1;
    for (int i = 0; i < 25; ++i) c.units.push_back(oracle::random_unit(rng));
    Corpus shuffled = c;
    std::shuffle(shuffled.units.begin(), shuffled.units.end(), rng);
    ok = ok && bleu_corpus(c, 2).score == bleu_corpus(shuffled, 2).score;
    ok = ok && meteor_corpus(c).score == meteor_corpus(shuffled).score;
    // report JSON round-trip
    MetricConfig mc;
    mc.kind = MetricConfig::Kind::meteor;
    nlohmann::json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["config"] = metric_config_json(mc);
    rep["score"] = meteor_corpus(c).score;
    const std::string once = rep.dump(2);
    ok = ok && nlohmann::json::parse(once).dump(2) == once;
    report(8, "property sweep (bounds, bp, monotonicity, reorder, round-trip)", ok);
}

// 9. 1000-unit corpus, all three metrics, under 10 s.
void criterion9() {
    std::mt19937 rng(31337);
    Corpus c;
    c.n_refs = 1;
    for (int i = 0; i < 1000; ++i) {
        EvalUnit u;
        u.line_no = static_cast<std::size_t>(i) + 1;
        // ~15 tokens over a small working vocabulary, as in short news text
        u.candidate = oracle::random_segment(rng, 18, 40, 12);
        u.references.push_back(oracle::random_segment(rng, 18, 40, 12));
        c.units.push_back(std::move(u));
    }
    ResourceSet rs = toy_resources();
    const auto t0 = std::chrono::steady_clock::now();
    const double bleu = bleu_corpus(c, 4).score;
    const double meteor = meteor_corpus(c, {}, rs).score;
    const double hindi = meteor_hindi_corpus(c, {}, rs).score;
    const double secs = elapsed_s(t0);
    char detail[96];
    std::snprintf(detail, sizeof detail, "%.2fs (bleu=%.3f meteor=%.3f hindi=%.3f)",
                  secs, bleu, meteor, hindi);
    report(9, "1000-unit throughput, all three metrics", secs < 10.0, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
