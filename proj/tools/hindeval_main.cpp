// hindeval: score, compare, and rank machine translation output against
// references with BLEU, METEOR, and METEOR-Hindi.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hindeval/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

struct CommonOpts {
    std::string cand_path;
    std::vector<std::string> ref_paths;
    std::string resources_dir;
    std::string out_path;
    std::string format = "json";

    // metric parameters
    int max_n = 4;
    std::vector<double> weights;
    std::string smoothing = "none";
    std::string fmean = "recall-weighted";
    double gamma = 0.5;
    double beta = 3.0;
    double lambda = 0.0;
    std::string tag_prefix = "V";
    std::string human_mapping = "mean/5";
};

void add_metric_params(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--max-n", o.max_n, "Maximum BLEU n-gram order")->default_val(4);
    cmd->add_option("--weights", o.weights, "BLEU order weights (must sum to 1)");
    cmd->add_option("--smoothing", o.smoothing, "BLEU smoothing: none|add-one-high-order")
        ->default_val("none");
    cmd->add_option("--fmean", o.fmean, "METEOR f-mean: recall-weighted|harmonic")
        ->default_val("recall-weighted");
    cmd->add_option("--gamma", o.gamma, "Fragmentation penalty weight")->default_val(0.5);
    cmd->add_option("--beta", o.beta, "Fragmentation penalty exponent")->default_val(3.0);
    cmd->add_option("--lambda", o.lambda, "Clause-match blend weight (meteor-hindi)")
        ->default_val(0.0);
    cmd->add_option("--tag-prefix", o.tag_prefix, "POS tag prefix identifying verbs")
        ->default_val("V");
    cmd->add_option("--resources", o.resources_dir,
                    "Resource directory (stems.tsv, synsets.txt, pos.tsv, "
                    "function_words.txt); default $HINDEVAL_RESOURCES");
    cmd->add_option("-o,--out", o.out_path, "Write the JSON report to this file");
}

struct LoadedResources {
    hindeval::ResourceSet set;
    std::string stem_path, synset_path, pos_path, fw_path;
};

LoadedResources load_resource_dir(const std::string& dir_opt) {
    LoadedResources lr;
    std::string dir = dir_opt;
    if (dir.empty()) {
        if (const char* env = std::getenv("HINDEVAL_RESOURCES")) dir = env;
    }
    if (dir.empty()) return lr;
    auto pick = [&](const char* name) -> std::string {
        fs::path p = fs::path(dir) / name;
        return fs::exists(p) ? p.string() : std::string();
    };
    lr.stem_path = pick("stems.tsv");
    lr.synset_path = pick("synsets.txt");
    lr.pos_path = pick("pos.tsv");
    lr.fw_path = pick("function_words.txt");
    lr.set = hindeval::load_resources(lr.stem_path, lr.synset_path, lr.pos_path, lr.fw_path);
    return lr;
}

hindeval::MetricConfig build_metric(const std::string& name, const CommonOpts& o) {
    auto kind = hindeval::MetricConfig::parse_kind(name);
    if (!kind)
        throw hindeval::config_error("unknown metric '" + name +
                                     "'; valid: bleu, meteor, meteor-hindi");
    hindeval::MetricConfig mc;
    mc.kind = *kind;
    mc.max_n = o.max_n;
    mc.weights = o.weights;
    if (o.smoothing == "none") {
        mc.smoothing = hindeval::Smoothing::none;
    } else if (o.smoothing == "add-one-high-order") {
        mc.smoothing = hindeval::Smoothing::add_one_high_order;
    } else {
        throw hindeval::config_error("unknown smoothing mode '" + o.smoothing + "'");
    }
    if (o.fmean == "recall-weighted") {
        mc.meteor.fmean_mode = hindeval::MeteorConfig::FMean::recall_weighted;
    } else if (o.fmean == "harmonic") {
        mc.meteor.fmean_mode = hindeval::MeteorConfig::FMean::harmonic;
    } else {
        throw hindeval::config_error("unknown fmean mode '" + o.fmean + "'");
    }
    mc.meteor.gamma = o.gamma;
    mc.meteor.beta = o.beta;
    mc.meteor.clause_lambda = o.lambda;
    mc.meteor.verb_tag_prefix = o.tag_prefix;
    return mc;
}

hindeval::HumanMapping parse_mapping(const std::string& s) {
    if (s == "mean/5") return hindeval::HumanMapping::mean_over_5;
    if (s == "(mean-1)/4") return hindeval::HumanMapping::shifted_quarter;
    throw hindeval::config_error("unknown human mapping '" + s + "'");
}

void emit_report(const json& report, const CommonOpts& o) {
    const std::string text = report.dump(2) + "\n";
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out_path, std::ios::binary);
        if (!out) throw hindeval::input_error("cannot write report: " + o.out_path);
        out << text;
    }
}

int cmd_score(const CommonOpts& o, const std::string& metric_name) {
    const hindeval::MetricConfig mc = build_metric(metric_name, o);
    const LoadedResources lr = load_resource_dir(o.resources_dir);
    if (mc.kind == hindeval::MetricConfig::Kind::meteor_hindi && lr.set.all_missing())
        std::cerr << "warning: resources missing; degraded to base pipeline\n";

    const hindeval::Corpus corpus = hindeval::load_corpus(o.cand_path, o.ref_paths);
    const double score = hindeval::score_corpus(corpus, mc, lr.set);

    char line[64];
    std::snprintf(line, sizeof line, "score: %.4f", score);
    std::cout << line << "\n";

    json report;
    report["schema_version"] = hindeval::kReportSchemaVersion;
    report["command"] = "score";
    report["candidate"] = o.cand_path;
    report["references"] = o.ref_paths;
    report["units"] = corpus.size();
    report["metric"] = mc.name();
    report["score"] = score;
    report["config"] = hindeval::metric_config_json(mc);
    report["resources"] =
        hindeval::resources_json(lr.stem_path, lr.synset_path, lr.pos_path, lr.fw_path);
    emit_report(report, o);
    return kExitOk;
}

int cmd_compare(const CommonOpts& o, const std::vector<std::string>& metric_names,
                const std::string& ratings_path) {
    std::vector<hindeval::MetricConfig> metrics;
    for (const auto& name : metric_names) metrics.push_back(build_metric(name, o));
    const LoadedResources lr = load_resource_dir(o.resources_dir);
    const hindeval::Corpus corpus = hindeval::load_corpus(o.cand_path, o.ref_paths);
    std::vector<hindeval::HumanRating> ratings;
    if (!ratings_path.empty()) ratings = hindeval::load_ratings(ratings_path);

    const auto rows = hindeval::compare_metrics(corpus, metrics, ratings, lr.set,
                                                parse_mapping(o.human_mapping));

    json report;
    report["schema_version"] = hindeval::kReportSchemaVersion;
    report["command"] = "compare";
    report["candidate"] = o.cand_path;
    report["references"] = o.ref_paths;
    report["units"] = corpus.size();
    json jrows = json::array();
    for (const auto& row : rows) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s\t%.4f", row.metric.c_str(), row.score);
        std::cout << buf << "\n";
        jrows.push_back({{"metric", row.metric}, {"score", row.score}, {"config", row.config}});
    }
    report["rows"] = jrows;
    report["resources"] =
        hindeval::resources_json(lr.stem_path, lr.synset_path, lr.pos_path, lr.fw_path);
    if (o.format == "json" || !o.out_path.empty()) emit_report(report, o);
    return kExitOk;
}

int cmd_rank(const CommonOpts& o, const std::vector<std::string>& engine_specs,
             const std::vector<std::string>& metric_names,
             const std::string& engine_ratings_path) {
    if (engine_specs.size() < 2)
        throw hindeval::config_error("ranking needs at least 2 --engine entries");
    std::vector<hindeval::MetricConfig> metrics;
    for (const auto& name : metric_names) metrics.push_back(build_metric(name, o));
    const LoadedResources lr = load_resource_dir(o.resources_dir);

    // Optional per-engine human scores: "label<TAB>score" with score in [0,1].
    std::map<std::string, double> human;
    if (!engine_ratings_path.empty()) {
        for (std::size_t i = 0; const std::string& line :
                                hindeval::read_lines(engine_ratings_path)) {
            ++i;
            if (line.empty() || line[0] == '#') continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw hindeval::input_error(engine_ratings_path + ":" + std::to_string(i) +
                                            ": expected 'label<TAB>score'");
            human[line.substr(0, tab)] = std::stod(line.substr(tab + 1));
        }
    }

    std::vector<hindeval::EngineInput> engines;
    for (const std::string& spec : engine_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw hindeval::config_error("--engine expects LABEL=FILE, got '" + spec + "'");
        hindeval::EngineInput e;
        e.label = spec.substr(0, eq);
        try {
            e.corpus = hindeval::load_corpus(spec.substr(eq + 1), o.ref_paths);
        } catch (const hindeval::input_error& err) {
            throw hindeval::input_error("engine '" + e.label + "': " + err.what());
        }
        if (auto it = human.find(e.label); it != human.end()) e.human = it->second;
        engines.push_back(std::move(e));
    }

    const auto rankings = hindeval::rank_engines(engines, metrics, lr.set);

    json report;
    report["schema_version"] = hindeval::kReportSchemaVersion;
    report["command"] = "rank";
    report["references"] = o.ref_paths;
    json jrank;
    for (const auto& [metric, rows] : rankings) {
        std::cout << metric << ":";
        json jrows = json::array();
        std::vector<double> ms, hs;
        for (const auto& row : rows) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %s=%.4f", row.label.c_str(), row.score);
            std::cout << buf;
            json jr = {{"label", row.label}, {"score", row.score}};
            if (row.human) {
                jr["human"] = *row.human;
                ms.push_back(row.score);
                hs.push_back(*row.human);
            }
            jrows.push_back(jr);
        }
        std::cout << "\n";
        json block;
        block["ranking"] = jrows;
        if (ms.size() >= 2) {
            if (auto rho = hindeval::rank_correlation(ms, hs)) {
                block["spearman_vs_human"] = *rho;
            } else {
                block["spearman_vs_human"] = nullptr;
            }
        }
        jrank[metric] = block;
    }
    report["metrics"] = jrank;
    report["resources"] =
        hindeval::resources_json(lr.stem_path, lr.synset_path, lr.pos_path, lr.fw_path);
    emit_report(report, o);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MT evaluation toolkit: BLEU / METEOR / METEOR-Hindi"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string metric_name = "bleu";
    std::vector<std::string> metric_names;
    std::string ratings_path;
    std::vector<std::string> engine_specs;
    std::string engine_ratings_path;

    auto* score = app.add_subcommand("score", "Score a candidate file against references");
    score->add_option("--cand", opts.cand_path, "Candidate file")->required();
    score->add_option("--ref", opts.ref_paths, "Reference file (repeatable)")->required();
    score->add_option("--metric", metric_name, "bleu|meteor|meteor-hindi")->required();
    add_metric_params(score, opts);

    auto* compare = app.add_subcommand("compare", "Comparative table of several metrics");
    compare->add_option("--cand", opts.cand_path, "Candidate file")->required();
    compare->add_option("--ref", opts.ref_paths, "Reference file (repeatable)")->required();
    compare->add_option("--metrics", metric_names, "Metrics to run")
        ->required()
        ->delimiter(',');
    compare->add_option("--ratings", ratings_path, "Human ratings TSV (line_no<TAB>1..5)");
    compare->add_option("--human-mapping", opts.human_mapping,
                        "Rating normalization: mean/5 | (mean-1)/4")
        ->default_val("mean/5");
    compare->add_option("--format", opts.format, "Stdout format: tsv|json")->default_val("json");
    add_metric_params(compare, opts);

    auto* rank = app.add_subcommand("rank", "Rank several engines against shared references");
    rank->add_option("--engine", engine_specs, "LABEL=FILE (repeatable)")->required();
    rank->add_option("--ref", opts.ref_paths, "Reference file (repeatable)")->required();
    rank->add_option("--metrics", metric_names, "Metrics to run")->required()->delimiter(',');
    rank->add_option("--ratings-per-engine", engine_ratings_path,
                     "Per-engine human scores TSV (label<TAB>score in [0,1])");
    add_metric_params(rank, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (score->parsed()) return cmd_score(opts, metric_name);
        if (compare->parsed()) return cmd_compare(opts, metric_names, ratings_path);
        if (rank->parsed())
            return cmd_rank(opts, engine_specs, metric_names, engine_ratings_path);
    } catch (const hindeval::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hindeval::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitConfig;
}
