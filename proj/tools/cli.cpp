#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "discover/error.hpp"
#include "discover/evaluate.hpp"
#include "discover/log_io.hpp"
#include "discover/model_io.hpp"

namespace discover::cli {

namespace {

struct LogArgs {
    std::string path;
    std::string format = "auto";
    char delimiter = ',';

    void attach(CLI::App& cmd) {
        cmd.add_option("--log", path, "Event log (XES or delimited text)")->required();
        cmd.add_option("--format", format, "Log format; auto picks xes for *.xes, txt otherwise")
            ->check(CLI::IsMember({"auto", "xes", "txt"}));
        cmd.add_option("--delimiter", delimiter, "Activity separator for txt logs");
    }

    EventLog load() const {
        LogFormat fmt = LogFormat::Txt;
        if (format == "xes") {
            fmt = LogFormat::Xes;
        } else if (format == "auto") {
            std::string ext = std::filesystem::path(path).extension().string();
            std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
            if (ext == ".xes") fmt = LogFormat::Xes;
        }
        return read_log(path, fmt, delimiter);
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + path + "'");
    file << content;
    if (!file) throw IoError("write failed for '" + path + "'");
}

UnknownActivityPolicy policy_from(const std::string& name) {
    return name == "error" ? UnknownActivityPolicy::Error : UnknownActivityPolicy::Reject;
}

}  // namespace

BenchStats benchmark(const EventLog& log, std::size_t runs, const MinerConfig& config) {
    using clock = std::chrono::steady_clock;
    BenchStats stats;
    stats.runs = runs;
    stats.activities = log.activity_count();
    stats.traces = log.trace_count();
    stats.mean_trace_length =
        log.trace_count() == 0 ? 0.0 : static_cast<double>(log.event_count()) / static_cast<double>(log.trace_count());

    (void)mine(log, config);  // warm-up, not timed

    std::vector<double> samples;
    samples.reserve(runs);
    for (std::size_t i = 0; i < runs; ++i) {
        const auto start = clock::now();
        const DcrGraph graph = mine(log, config);
        const auto stop = clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        if (graph.event_count() != log.activity_count()) throw Error("benchmark: inconsistent model");
    }
    if (!samples.empty()) {
        double sum = 0.0;
        for (double s : samples) sum += s;
        stats.mean_ms = sum / static_cast<double>(samples.size());
        stats.min_ms = *std::min_element(samples.begin(), samples.end());
        stats.max_ms = *std::max_element(samples.begin(), samples.end());
    }
    return stats;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discover DCR graphs from event logs and classify traces against them", "discover"};
    app.require_subcommand(1, 1);

    // mine
    auto* mine_cmd = app.add_subcommand("mine", "Mine a DCR graph from a log");
    LogArgs mine_log;
    mine_log.attach(*mine_cmd);
    std::string mine_out;
    std::string mine_dot;
    bool verbose = false;
    bool cartesian = false;
    mine_cmd->add_option("--out", mine_out, "Model JSON output")->required();
    mine_cmd->add_option("--dot", mine_dot, "Also write a Graphviz rendering");
    mine_cmd->add_flag("--verbose", verbose, "Write stage diagnostics as JSON to standard error");
    mine_cmd->add_flag("--cartesian-self-excl", cartesian,
                       "Exclude the full AtMostOnce x AtMostOnce product instead of self pairs only");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Replay a log on a model");
    LogArgs classify_log;
    classify_log.attach(*classify_cmd);
    std::string classify_model;
    std::string classify_out;
    std::string classify_unknown = "reject";
    classify_cmd->add_option("--model", classify_model, "Model JSON")->required();
    classify_cmd->add_option("--out", classify_out, "Classification CSV output")->required();
    classify_cmd->add_option("--unknown", classify_unknown, "Policy for activities absent from the model")
        ->check(CLI::IsMember({"reject", "error"}));

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "Score a model against labelled traces");
    LogArgs eval_log;
    eval_log.attach(*eval_cmd);
    std::string eval_model;
    std::string eval_truth;
    std::string eval_unknown = "reject";
    MetricOptions options;
    bool eval_json = false;
    bool printed_fbeta = false;
    eval_cmd->add_option("--model", eval_model, "Model JSON")->required();
    eval_cmd->add_option("--truth", eval_truth, "CSV trace_id,label with label pos|neg")->required();
    eval_cmd->add_option("--beta", options.beta, "F-score weight")->check(CLI::NonNegativeNumber);
    eval_cmd->add_option("--alpha", options.alpha_penalty, "Penalty for a false positive");
    eval_cmd->add_option("--beta-penalty", options.beta_penalty, "Penalty for a false negative");
    eval_cmd->add_option("--unknown", eval_unknown, "Policy for activities absent from the model")
        ->check(CLI::IsMember({"reject", "error"}));
    eval_cmd->add_flag("--json", eval_json, "Print the report as JSON");
    eval_cmd->add_flag("--printed-fbeta", printed_fbeta, "Use b*P + R instead of b^2*P + R in the F denominator");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Time repeated mining of a log");
    LogArgs bench_log;
    bench_log.attach(*bench_cmd);
    std::size_t bench_runs = 100;
    bool bench_json = false;
    bench_cmd->add_option("--runs", bench_runs, "Timed runs (one extra warm-up run is not counted)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--json", bench_json, "Print the statistics as JSON");

    // export
    auto* export_cmd = app.add_subcommand("export", "Render a model as Graphviz DOT");
    std::string export_model;
    std::string export_dot;
    export_cmd->add_option("--model", export_model, "Model JSON")->required();
    export_cmd->add_option("--dot", export_dot, "DOT output")->required();

    std::vector<const char*> argv;
    argv.push_back("discover");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "discover: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (mine_cmd->parsed()) {
            const EventLog log = mine_log.load();
            MinerConfig config;
            config.self_exclusion_only = !cartesian;
            config.txt_delimiter = mine_log.delimiter;
            MiningDiagnostics diag;
            const DcrGraph graph = mine(log, config, verbose ? &diag : nullptr);
            write_file(mine_out, to_json_string(graph));
            if (!mine_dot.empty()) write_file(mine_dot, to_dot(graph));
            if (verbose) err << diag.to_json(log.alphabet()).dump(2) << '\n';
            out << "mined " << graph.event_count() << " events, " << graph.relation_count() << " relations from "
                << log.trace_count() << " traces\n";
        } else if (classify_cmd->parsed()) {
            const DcrGraph graph = read_model(classify_model);
            const EventLog log = classify_log.load();
            const auto results = classify(graph, log, policy_from(classify_unknown));
            std::ostringstream csv;
            write_classifications(results, csv);
            write_file(classify_out, csv.str());
            const auto accepted = std::count_if(results.begin(), results.end(),
                                                [](const auto& r) { return r.verdict == Verdict::Accepted; });
            out << "accepted " << accepted << ", rejected " << (static_cast<std::ptrdiff_t>(results.size()) - accepted)
                << '\n';
        } else if (eval_cmd->parsed()) {
            const DcrGraph graph = read_model(eval_model);
            const EventLog log = eval_log.load();
            const auto truth = read_truth_labels(std::filesystem::path(eval_truth));
            const auto results = classify(graph, log, policy_from(eval_unknown));
            if (printed_fbeta) options.f_beta_form = FBetaForm::Printed;
            const MetricReport report = metrics(confusion(results, truth), options);
            if (eval_json) out << report_to_json(report).dump(2) << '\n';
            else out << report_to_text(report);
        } else if (bench_cmd->parsed()) {
            const EventLog log = bench_log.load();
            const BenchStats s = benchmark(log, bench_runs);
            if (bench_json) {
                nlohmann::ordered_json j{{"runs", s.runs},       {"mean_ms", s.mean_ms},
                                         {"min_ms", s.min_ms},   {"max_ms", s.max_ms},
                                         {"activities", s.activities}, {"traces", s.traces},
                                         {"mean_trace_length", s.mean_trace_length}};
                out << j.dump(2) << '\n';
            } else {
                out << std::left << std::setw(12) << "activities" << std::setw(8) << "traces" << std::setw(12)
                    << "mean_len" << std::setw(6) << "runs" << std::setw(12) << "mean_ms" << std::setw(12)
                    << "min_ms" << "max_ms" << '\n';
                out << std::fixed << std::setprecision(3) << std::setw(12) << s.activities << std::setw(8)
                    << s.traces << std::setw(12) << s.mean_trace_length << std::setw(6) << s.runs << std::setw(12)
                    << s.mean_ms << std::setw(12) << s.min_ms << s.max_ms << '\n';
            }
        } else if (export_cmd->parsed()) {
            const DcrGraph graph = read_model(export_model);
            write_file(export_dot, to_dot(graph));
        }
    } catch (const IoError& e) {
        err << "discover: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "discover: " << e.what() << '\n';
        return kParseError;
    }
    return kOk;
}

}  // namespace discover::cli
