// zhent: Shannon entropy of type frequency distributions, plus the corpus
// statistics and benchmarking companions. See README.md for the file
// formats and examples.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "zhent/analysis.hpp"
#include "zhent/corpus_io.hpp"
#include "zhent/cost_model.hpp"
#include "zhent/estimators.hpp"
#include "zhent/spectrum.hpp"
#include "zhent/zipf.hpp"

namespace fs = std::filesystem;
using namespace zhent;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIo = 3;

int exit_code_for(const Error& error) {
    return error.code() == ErrorCode::io_failure ? kExitIo : kExitData;
}

std::string read_stdin() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

std::string slurp(const std::string& path) {
    return path == "-" ? read_stdin() : read_text_file(path);
}

TokenizerMode parse_mode(const std::string& name) {
    if (name == "whitespace") return TokenizerMode::whitespace;
    if (name == "nonword") return TokenizerMode::nonword_split;
    throw CLI::ValidationError("--tokenize", "expected whitespace|nonword");
}

Estimator parse_estimator(const std::string& name) {
    if (name == "plugin") return Estimator::plugin;
    if (name == "chao-shen") return Estimator::chao_shen;
    if (name == "zhang") return Estimator::zhang_spectrum;
    if (name == "zhang-linear") return Estimator::zhang_linear;
    if (name == "zhang-naive") return Estimator::zhang_naive;
    throw CLI::ValidationError(
        "--estimator", "expected plugin|chao-shen|zhang|zhang-linear|zhang-naive");
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ZHENT_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return 1;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// ---- input ingestion -------------------------------------------------

struct Ingested {
    TypeFrequencyTable table;
    FrequencySpectrum spectrum;
};

struct IngestOptions {
    std::optional<TokenizerMode> tokenize_mode;  // set -> treat input as raw text
    bool case_fold = false;
};

bool looks_like_spectrum(const std::string& content) {
    return content.rfind("#T=", 0) == 0;
}

Ingested ingest_text(const std::string& content, const fs::path& label,
                     TokenizerMode mode, bool case_fold) {
    Ingested result;
    TokenizerConfig config{mode, case_fold};
    const auto tokens = tokenize(content, config);
    result.table = to_frequency_table(count_types(tokens));
    if (result.table.empty()) {
        throw empty_input("no tokens in " + label.string());
    }
    result.spectrum = build_spectrum(result.table);
    return result;
}

Ingested ingest_path(const std::string& path, const IngestOptions& options) {
    Ingested result;
    if (options.tokenize_mode || path == "-") {
        if (!options.tokenize_mode && path == "-") {
            throw Error(ErrorCode::invalid_input,
                        "reading stdin requires --tokenize");
        }
        return ingest_text(slurp(path), path, *options.tokenize_mode,
                           options.case_fold);
    }
    // Peek the header to pick the reader.
    const std::string content = read_text_file(path);
    if (looks_like_spectrum(content)) {
        result.spectrum = read_spectrum_file(path);
        result.table = result.spectrum.to_table();
    } else {
        const FrequencyList list = read_frequency_file(path);
        if (list.empty()) {
            throw empty_input("empty frequency file: " + path);
        }
        result.table = to_frequency_table(list);
        result.spectrum = build_spectrum(result.table);
    }
    return result;
}

std::vector<fs::path> collect_files(const std::vector<std::string>& inputs,
                                    bool recursive) {
    std::vector<fs::path> files;
    try {
        for (const auto& input : inputs) {
            fs::path p(input);
            std::error_code ec;
            if (fs::is_directory(p, ec)) {
                if (recursive) {
                    for (const auto& entry : fs::recursive_directory_iterator(p)) {
                        if (entry.is_regular_file()) {
                            files.push_back(entry.path());
                        }
                    }
                } else {
                    for (const auto& entry : fs::directory_iterator(p)) {
                        if (entry.is_regular_file()) {
                            files.push_back(entry.path());
                        }
                    }
                }
            } else if (fs::is_regular_file(p, ec)) {
                files.push_back(p);
            } else {
                throw Error(ErrorCode::io_failure,
                            "not a file or directory: " + input);
            }
        }
    } catch (const fs::filesystem_error& e) {
        throw Error(ErrorCode::io_failure, e.what());
    }
    std::sort(files.begin(), files.end());
    return files;
}

// Builds one TextStatsRecord per readable file; unreadable/malformed files
// are reported on stderr and skipped. Files are processed concurrently up
// to `jobs`, output order is by text_id regardless.
std::vector<TextStatsRecord> ingest_records(const std::vector<fs::path>& files,
                                            const IngestOptions& options,
                                            unsigned jobs) {
    if (files.empty()) {
        throw empty_input("no input files");
    }
    std::vector<std::optional<TextStatsRecord>> slots(files.size());
    std::atomic<std::size_t> next{0};
    std::mutex stderr_mutex;
    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(jobs, files.size()));

    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < files.size();
             i = next.fetch_add(1)) {
            try {
                const Ingested in = ingest_path(files[i].string(), options);
                slots[i] = TextStatsRecord{files[i].filename().string(),
                                           stats(in.spectrum)};
            } catch (const Error& e) {
                std::lock_guard<std::mutex> lock(stderr_mutex);
                std::cerr << "warning: skipping " << files[i].string() << ": "
                          << e.what() << '\n';
            }
        }
    };
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    std::vector<TextStatsRecord> records;
    records.reserve(files.size());
    for (auto& slot : slots) {
        if (slot) {
            records.push_back(std::move(*slot));
        }
    }
    if (records.empty()) {
        throw Error(ErrorCode::invalid_input, "all input files failed");
    }
    std::sort(records.begin(), records.end(),
              [](const TextStatsRecord& a, const TextStatsRecord& b) {
                  return a.text_id < b.text_id;
              });
    return records;
}

// ---- subcommands ------------------------------------------------------

struct EstimateOptions {
    std::string input = "-";
    std::string estimator_name = "zhang";
    std::string unit_name = "nats";
    std::string tokenize_name;
    bool case_fold = false;
    bool counters = false;
    bool allow_naive = false;
    unsigned jobs = 1;
};

int run_estimate(const EstimateOptions& opt) {
    IngestOptions ingest;
    if (!opt.tokenize_name.empty()) {
        ingest.tokenize_mode = parse_mode(opt.tokenize_name);
    }
    ingest.case_fold = opt.case_fold;
    const Estimator estimator = parse_estimator(opt.estimator_name);
    Unit unit;
    if (opt.unit_name == "nats") {
        unit = Unit::nats;
    } else if (opt.unit_name == "bits") {
        unit = Unit::bits;
    } else {
        throw CLI::ValidationError("--unit", "expected nats|bits");
    }

    const Ingested in = ingest_path(opt.input, ingest);
    const SpectrumStats st = stats(in.spectrum);

    if (estimator == Estimator::zhang_naive && st.t_tokens > 5000 &&
        !opt.allow_naive) {
        throw Error(ErrorCode::invalid_input,
                    "zhang-naive is O(VT^2) and T=" + std::to_string(st.t_tokens) +
                        " > 5000; pass --naive-oracle to force");
    }

    EntropyEstimate estimate;
    switch (estimator) {
        case Estimator::plugin: estimate = plugin_entropy(in.table); break;
        case Estimator::chao_shen: estimate = chao_shen_entropy(in.table); break;
        case Estimator::zhang_naive: estimate = zhang_naive(in.table); break;
        case Estimator::zhang_linear:
            estimate = zhang_linear(in.table, opt.jobs);
            break;
        case Estimator::zhang_spectrum:
            estimate = zhang_spectrum(in.spectrum, opt.jobs);
            break;
    }
    estimate = convert_unit(estimate, unit);

    std::string header = "estimator\tvalue\tunit\tt\tv\tw\tfmax";
    std::string row = std::string(to_string(estimate.estimator)) + '\t' +
                      format_value(estimate.value) + '\t' +
                      to_string(estimate.unit) + '\t' +
                      std::to_string(st.t_tokens) + '\t' +
                      std::to_string(st.v_types) + '\t' +
                      std::to_string(st.w_distinct) + '\t' +
                      std::to_string(st.f_max);
    if (opt.counters) {
        header += "\tmeasured\tpredicted";
        if (estimate.counters) {
            row += '\t' + std::to_string(estimate.counters->inner_iterations);
            if (estimator == Estimator::zhang_linear) {
                row += '\t' + std::to_string(
                                  predict_a_prime(st.t_tokens, st.v_types));
            } else if (estimator == Estimator::zhang_spectrum) {
                row += '\t' + std::to_string(predict_c(compact(in.spectrum)));
            } else {
                row += "\tna";
            }
        } else {
            row += "\tna\tna";
        }
    }
    std::cout << header << '\n' << row << '\n';
    return 0;
}

struct CorpusOptions {
    std::vector<std::string> inputs;
    std::string tokenize_name;
    bool case_fold = false;
    bool recursive = false;
    unsigned jobs = default_jobs();
};

IngestOptions to_ingest_options(const CorpusOptions& opt) {
    IngestOptions ingest;
    if (!opt.tokenize_name.empty()) {
        ingest.tokenize_mode = parse_mode(opt.tokenize_name);
    }
    ingest.case_fold = opt.case_fold;
    return ingest;
}

int run_stats(const CorpusOptions& opt) {
    const auto files = collect_files(opt.inputs, opt.recursive);
    const auto records = ingest_records(files, to_ingest_options(opt), opt.jobs);

    std::cout << "text_id\tt\tv\tw\tfmax\tw_over_v\tfmax_over_v\tfmax_over_t\n";
    for (const auto& r : records) {
        std::cout << r.text_id << '\t' << r.stats.t_tokens << '\t'
                  << r.stats.v_types << '\t' << r.stats.w_distinct << '\t'
                  << r.stats.f_max << '\t' << format_g(r.stats.w_over_v) << '\t'
                  << format_g(r.stats.fmax_over_v) << '\t'
                  << format_g(r.stats.fmax_over_t) << '\n';
    }
    std::cout << '\n' << summary_tsv(summarize(records));
    return 0;
}

struct TrendOptions {
    CorpusOptions corpus;
    std::string x_name = "v";
    std::string y_name = "w";
};

int run_trend(const TrendOptions& opt) {
    const auto files = collect_files(opt.corpus.inputs, opt.corpus.recursive);
    const auto records =
        ingest_records(files, to_ingest_options(opt.corpus), opt.corpus.jobs);
    const TrendReport report = trend_report(records, parse_metric(opt.x_name),
                                            parse_metric(opt.y_name));
    std::cout << "#x=" << to_string(report.x_metric)
              << "\ty=" << to_string(report.y_metric)
              << "\ttau=" << format_g(report.kendall.tau)
              << "\tp=" << format_g(report.kendall.p_value)
              << "\tn=" << report.scatter.size() << '\n';
    std::cout << scatter_tsv(report);
    return 0;
}

struct BenchOptions {
    std::uint64_t n_ranks = 50000;
    double alpha = 1.1;
    std::vector<std::uint64_t> tokens = {1000000};
    std::uint64_t seed = 1;
    unsigned reps = 5;
    unsigned jobs = default_jobs();
};

std::uint64_t median_ns(std::vector<std::uint64_t>& samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

int run_bench(const BenchOptions& opt) {
    if (opt.reps == 0) {
        throw Error(ErrorCode::invalid_input, "--reps must be >= 1");
    }
    std::cout << "t\tv\tw\tpredicted_a_prime\tpredicted_c\tpredicted_saving\t"
                 "measured_a_prime\tmeasured_c\titer_ratio\t"
                 "wall_ns_a_prime\twall_ns_c\tspeedup\n";
    for (std::uint64_t t_tokens : opt.tokens) {
        ZipfGeneratorConfig config{opt.n_ranks, opt.alpha, t_tokens, opt.seed};
        const TypeFrequencyTable table = zipf_generate(config);
        const FrequencySpectrum spectrum = build_spectrum(table);
        const CompactSpectrum comp = compact(spectrum);
        const SpectrumStats st = stats(spectrum);

        const std::uint64_t pred_a = predict_a_prime(st.t_tokens, st.v_types);
        const std::uint64_t pred_c = predict_c(comp);
        const std::uint64_t pred_saving = predict_saving(comp, st.v_types);

        const auto time_once = [&](auto&& fn) {
            const auto start = std::chrono::steady_clock::now();
            const EntropyEstimate e = fn();
            const auto stop = std::chrono::steady_clock::now();
            return std::pair<std::uint64_t, EntropyEstimate>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                    .count(),
                e);
        };
        const auto run_linear = [&] { return zhang_linear(table, opt.jobs); };
        const auto run_spectrum = [&] { return zhang_spectrum(comp, opt.jobs); };

        (void)run_spectrum();  // warm-up
        std::vector<std::uint64_t> wall_a, wall_c;
        EntropyEstimate est_a, est_c;
        for (unsigned r = 0; r < opt.reps; ++r) {
            auto [ns_c, e_c] = time_once(run_spectrum);
            wall_c.push_back(ns_c);
            est_c = e_c;
        }
        for (unsigned r = 0; r < opt.reps; ++r) {
            auto [ns_a, e_a] = time_once(run_linear);
            wall_a.push_back(ns_a);
            est_a = e_a;
        }
        const std::uint64_t med_a = median_ns(wall_a);
        const std::uint64_t med_c = median_ns(wall_c);

        std::cout << st.t_tokens << '\t' << st.v_types << '\t' << st.w_distinct
                  << '\t' << pred_a << '\t' << pred_c << '\t' << pred_saving
                  << '\t' << est_a.counters->inner_iterations << '\t'
                  << est_c.counters->inner_iterations << '\t'
                  << format_g(static_cast<double>(pred_a) /
                              static_cast<double>(pred_c))
                  << '\t' << med_a << '\t' << med_c << '\t'
                  << format_g(static_cast<double>(med_a) /
                              static_cast<double>(med_c))
                  << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy of type frequency distributions (Zhang's estimator) "
                 "with corpus statistics and cost benchmarking"};
    app.require_subcommand(1);

    // tokenize ----------------------------------------------------------
    std::string tok_input = "-";
    std::string tok_mode = "whitespace";
    bool tok_fold = false;
    auto* tok = app.add_subcommand("tokenize", "Split text into word tokens");
    tok->add_option("input", tok_input, "text file or - for stdin");
    tok->add_option("--tokenize", tok_mode, "whitespace|nonword");
    tok->add_flag("--case-fold", tok_fold, "lowercase tokens");

    // freq --------------------------------------------------------------
    std::string freq_input = "-";
    std::string freq_mode = "whitespace";
    bool freq_fold = false;
    auto* freq = app.add_subcommand("freq", "Count type frequencies in text");
    freq->add_option("input", freq_input, "text file or - for stdin");
    freq->add_option("--tokenize", freq_mode, "whitespace|nonword");
    freq->add_flag("--case-fold", freq_fold, "lowercase tokens");

    // estimate ------------------------------------------------------------
    EstimateOptions est;
    auto* estimate = app.add_subcommand("estimate", "Estimate type entropy");
    estimate->add_option("input", est.input,
                         "frequency file, spectrum file, raw text "
                         "(with --tokenize), or - for stdin");
    estimate->add_option("--estimator", est.estimator_name,
                         "plugin|chao-shen|zhang|zhang-linear|zhang-naive");
    estimate->add_option("--unit", est.unit_name, "nats|bits");
    estimate->add_option("--tokenize", est.tokenize_name,
                         "treat input as raw text: whitespace|nonword");
    estimate->add_flag("--case-fold", est.case_fold, "lowercase tokens");
    estimate->add_flag("--counters", est.counters,
                       "print measured vs predicted iteration counts");
    estimate->add_flag("--naive-oracle", est.allow_naive,
                       "allow zhang-naive beyond T=5000");
    estimate->add_option("--jobs", est.jobs, "worker threads (default 1)");

    // stats ---------------------------------------------------------------
    CorpusOptions stats_opt;
    auto* stats_cmd = app.add_subcommand("stats", "Per-text statistics and summary");
    stats_cmd->add_option("inputs", stats_opt.inputs, "files or directories")
        ->required();
    stats_cmd->add_option("--tokenize", stats_opt.tokenize_name,
                          "treat inputs as raw text: whitespace|nonword");
    stats_cmd->add_flag("--case-fold", stats_opt.case_fold, "lowercase tokens");
    stats_cmd->add_flag("--recursive", stats_opt.recursive,
                        "recurse into directories");
    stats_cmd->add_option("--jobs", stats_opt.jobs,
                          "concurrent files (default $ZHENT_JOBS or 1)");

    // trend ---------------------------------------------------------------
    TrendOptions trend_opt;
    auto* trend = app.add_subcommand("trend", "Kendall trend test and scatter data");
    trend->add_option("inputs", trend_opt.corpus.inputs, "files or directories")
        ->required();
    trend->add_option("--x", trend_opt.x_name,
                      "t|v|w|fmax|w_over_v|fmax_over_v|fmax_over_t");
    trend->add_option("--y", trend_opt.y_name, "same choices as --x");
    trend->add_option("--tokenize", trend_opt.corpus.tokenize_name,
                      "treat inputs as raw text: whitespace|nonword");
    trend->add_flag("--case-fold", trend_opt.corpus.case_fold, "lowercase tokens");
    trend->add_flag("--recursive", trend_opt.corpus.recursive,
                    "recurse into directories");
    trend->add_option("--jobs", trend_opt.corpus.jobs, "concurrent files");

    // bench ---------------------------------------------------------------
    BenchOptions bench_opt;
    auto* bench = app.add_subcommand(
        "bench", "Compare the linear and spectrum algorithms on Zipf samples");
    bench->add_option("--types", bench_opt.n_ranks, "rank pool size");
    bench->add_option("--alpha", bench_opt.alpha, "rank-frequency exponent");
    bench->add_option("--tokens", bench_opt.tokens,
                      "sample length; repeat for one row per length");
    bench->add_option("--seed", bench_opt.seed, "generator seed");
    bench->add_option("--reps", bench_opt.reps, "timing repetitions (median)");
    bench->add_option("--jobs", bench_opt.jobs,
                      "estimator threads for both algorithms");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tok->parsed()) {
            TokenizerConfig config{parse_mode(tok_mode), tok_fold};
            for (const auto& token : tokenize(slurp(tok_input), config)) {
                std::cout << token << '\n';
            }
            return 0;
        }
        if (freq->parsed()) {
            TokenizerConfig config{parse_mode(freq_mode), freq_fold};
            const FrequencyList list = count_types(tokenize(slurp(freq_input), config));
            for (const auto& e : list.entries()) {
                std::cout << e.type << '\t' << e.count << '\n';
            }
            return 0;
        }
        if (estimate->parsed()) return run_estimate(est);
        if (stats_cmd->parsed()) return run_stats(stats_opt);
        if (trend->parsed()) return run_trend(trend_opt);
        if (bench->parsed()) return run_bench(bench_opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
