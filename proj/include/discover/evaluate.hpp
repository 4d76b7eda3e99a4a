#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "discover/dcr_graph.hpp"
#include "discover/event_log.hpp"
#include "discover/log_io.hpp"
#include "discover/miner.hpp"

namespace discover {

/// Replays every trace of log on graph. Activities unknown to the graph
/// either reject the trace or raise FormatError, depending on policy.
std::vector<ClassificationResult> classify(const DcrGraph& graph, const EventLog& log,
                                           UnknownActivityPolicy policy = UnknownActivityPolicy::Reject);

// "Positive" = the trace belongs to the process; "accepted" = the model
// predicts positive.
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    std::size_t total() const noexcept { return tp + fp + fn + tn; }
    /// Same counts with the negative class as target.
    ConfusionMatrix transposed() const noexcept { return {tn, fn, fp, tp}; }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// std::invalid_argument if the lists differ in length.
ConfusionMatrix confusion(const std::vector<Verdict>& predicted, const std::vector<bool>& truth_positive);

enum class FBetaForm {
    Standard,  // (1 + b^2) P R / (b^2 P + R)
    Printed,   // (1 + b^2) P R / (b P + R); equal to Standard at b = 1
};

struct MetricOptions {
    double beta = 1.0;
    double alpha_penalty = 1.0;  // cost of a false positive (type I)
    double beta_penalty = 1.0;   // cost of a false negative (type II)
    FBetaForm f_beta_form = FBetaForm::Standard;
};

struct ClassScores {
    double precision = 0.0;
    double recall = 0.0;
    double f_beta = 0.0;
};

struct MetricReport {
    ConfusionMatrix matrix;
    MetricOptions options;
    double accuracy = 0.0;
    ClassScores positive;
    ClassScores negative;
    double mcc = 0.0;
    double weighted_error = 0.0;
};

/// Ratios with a zero denominator are reported as 0 (MCC included).
/// std::invalid_argument if the matrix is empty.
MetricReport metrics(const ConfusionMatrix& cm, const MetricOptions& options = {});

double matthews_correlation(const ConfusionMatrix& cm);
double f_beta(double precision, double recall, double beta, FBetaForm form = FBetaForm::Standard);

nlohmann::ordered_json report_to_json(const MetricReport& report);
std::string report_to_text(const MetricReport& report);

// ─── Ground truth ─────────────────────────────────────────────

/// CSV `trace_id,label` with label pos or neg; the header line is optional.
/// FormatError on a bad label or a duplicate id.
std::unordered_map<std::string, bool> read_truth_labels(std::istream& in);
std::unordered_map<std::string, bool> read_truth_labels(const std::filesystem::path& path);

/// Pairs classifications with labels by trace id. FormatError naming the id
/// when a labelled id is not among the results or a result has no label.
ConfusionMatrix confusion(const std::vector<ClassificationResult>& results,
                          const std::unordered_map<std::string, bool>& truth);

}  // namespace discover
