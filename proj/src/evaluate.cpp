#include "discover/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "discover/error.hpp"

namespace discover {

std::vector<ClassificationResult> classify(const DcrGraph& graph, const EventLog& log,
                                           UnknownActivityPolicy policy) {
    // Log activity id -> graph event id, resolved once per alphabet entry.
    std::vector<std::optional<EventId>> to_event;
    to_event.reserve(log.activity_count());
    for (const auto& name : log.alphabet().names()) to_event.push_back(graph.find(name));

    std::vector<ClassificationResult> results;
    results.reserve(log.trace_count());
    std::vector<EventId> events;
    for (const auto& trace : log.traces()) {
        events.clear();
        const std::string* unknown = nullptr;
        for (const ActivityId a : trace.events) {
            if (!to_event[a]) {
                unknown = &log.alphabet().name(a);
                break;
            }
            events.push_back(*to_event[a]);
        }
        if (unknown != nullptr) {
            if (policy == UnknownActivityPolicy::Error)
                throw FormatError("trace '" + trace.id + "' contains unknown activity '" + *unknown + "'");
            results.push_back(ClassificationResult::rejected(trace.id, reason::UnknownActivity{*unknown}));
            continue;
        }

        const auto verdict = replay(graph, events);
        switch (verdict.outcome) {
            case ReplayVerdict::Outcome::Accepted:
                results.push_back(ClassificationResult::accepted(trace.id));
                break;
            case ReplayVerdict::Outcome::RejectedDisabled:
                results.push_back(ClassificationResult::rejected(trace.id, reason::DisabledEvent{verdict.position}));
                break;
            case ReplayVerdict::Outcome::RejectedNonAccepting:
                results.push_back(ClassificationResult::rejected(trace.id, reason::NonAcceptingFinal{}));
                break;
        }
    }
    return results;
}

ConfusionMatrix confusion(const std::vector<Verdict>& predicted, const std::vector<bool>& truth_positive) {
    if (predicted.size() != truth_positive.size())
        throw std::invalid_argument("confusion: " + std::to_string(predicted.size()) + " predictions vs " +
                                    std::to_string(truth_positive.size()) + " labels");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const bool accepted = predicted[i] == Verdict::Accepted;
        const bool positive = truth_positive[i];
        if (accepted && positive) ++cm.tp;
        else if (accepted) ++cm.fp;
        else if (positive) ++cm.fn;
        else ++cm.tn;
    }
    return cm;
}

namespace {

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

ClassScores scores(const ConfusionMatrix& cm, const MetricOptions& options) {
    ClassScores out;
    out.precision = ratio(static_cast<double>(cm.tp), static_cast<double>(cm.tp + cm.fp));
    out.recall = ratio(static_cast<double>(cm.tp), static_cast<double>(cm.tp + cm.fn));
    out.f_beta = f_beta(out.precision, out.recall, options.beta, options.f_beta_form);
    return out;
}

}  // namespace

double f_beta(double precision, double recall, double beta, FBetaForm form) {
    const double b2 = beta * beta;
    const double weight = form == FBetaForm::Standard ? b2 : beta;
    return ratio((1.0 + b2) * precision * recall, weight * precision + recall);
}

double matthews_correlation(const ConfusionMatrix& cm) {
    const auto tp = static_cast<double>(cm.tp);
    const auto fp = static_cast<double>(cm.fp);
    const auto fn = static_cast<double>(cm.fn);
    const auto tn = static_cast<double>(cm.tn);
    const double den = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    if (den == 0.0) return 0.0;
    return (tp * tn - fp * fn) / std::sqrt(den);
}

MetricReport metrics(const ConfusionMatrix& cm, const MetricOptions& options) {
    if (cm.total() == 0) throw std::invalid_argument("metrics: empty confusion matrix");
    const auto total = static_cast<double>(cm.total());
    MetricReport r;
    r.matrix = cm;
    r.options = options;
    r.accuracy = static_cast<double>(cm.tp + cm.tn) / total;
    r.positive = scores(cm, options);
    r.negative = scores(cm.transposed(), options);
    r.mcc = matthews_correlation(cm);
    r.weighted_error = (options.alpha_penalty * static_cast<double>(cm.fp) +
                        options.beta_penalty * static_cast<double>(cm.fn)) /
                       total;
    return r;
}

nlohmann::ordered_json report_to_json(const MetricReport& r) {
    using nlohmann::ordered_json;
    auto cls = [](const ClassScores& s) {
        return ordered_json{{"precision", s.precision}, {"recall", s.recall}, {"f_beta", s.f_beta}};
    };
    ordered_json out;
    out["confusion"] = {{"tp", r.matrix.tp}, {"fp", r.matrix.fp}, {"fn", r.matrix.fn}, {"tn", r.matrix.tn}};
    out["beta"] = r.options.beta;
    out["alpha_penalty"] = r.options.alpha_penalty;
    out["beta_penalty"] = r.options.beta_penalty;
    out["accuracy"] = r.accuracy;
    out["positive"] = cls(r.positive);
    out["negative"] = cls(r.negative);
    out["mcc"] = r.mcc;
    out["weighted_error"] = r.weighted_error;
    return out;
}

std::string report_to_text(const MetricReport& r) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    const auto& m = r.matrix;
    out << "                 truth+    truth-\n";
    out << "predicted+  " << std::setw(10) << m.tp << std::setw(10) << m.fp << '\n';
    out << "predicted-  " << std::setw(10) << m.fn << std::setw(10) << m.tn << '\n';
    out << '\n';
    out << std::left << std::setw(16) << "" << std::right << std::setw(10) << "target+" << std::setw(10)
        << "target-" << '\n';
    auto row = [&](const char* name, double pos, double neg) {
        out << std::left << std::setw(16) << name << std::right << std::setw(10) << pos << std::setw(10) << neg
            << '\n';
    };
    row("precision", r.positive.precision, r.negative.precision);
    row("recall", r.positive.recall, r.negative.recall);
    std::ostringstream fname;
    fname << "F(beta=" << std::defaultfloat << r.options.beta << ")";
    row(fname.str().c_str(), r.positive.f_beta, r.negative.f_beta);
    out << '\n';
    out << std::left << std::setw(16) << "accuracy" << std::right << std::setw(10) << r.accuracy << '\n';
    out << std::left << std::setw(16) << "mcc" << std::right << std::setw(10) << r.mcc << '\n';
    out << std::left << std::setw(16) << "weighted error" << std::right << std::setw(10) << r.weighted_error
        << '\n';
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no);
    return fields;
}

}  // namespace

std::unordered_map<std::string, bool> read_truth_labels(std::istream& in) {
    std::unordered_map<std::string, bool> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line, line_no);
        if (fields.size() != 2) throw FormatError("expected 'trace_id,label'", line_no);
        if (line_no == 1 && fields[0] == "trace_id" && fields[1] == "label") continue;
        bool positive;
        if (fields[1] == "pos") positive = true;
        else if (fields[1] == "neg") positive = false;
        else throw FormatError("label must be 'pos' or 'neg', got '" + fields[1] + "'", line_no);
        if (!labels.emplace(fields[0], positive).second)
            throw FormatError("duplicate trace id '" + fields[0] + "'", line_no);
    }
    if (in.bad()) throw IoError("read failure while parsing labels");
    return labels;
}

std::unordered_map<std::string, bool> read_truth_labels(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open labels '" + path.string() + "'");
    return read_truth_labels(in);
}

ConfusionMatrix confusion(const std::vector<ClassificationResult>& results,
                          const std::unordered_map<std::string, bool>& truth) {
    std::vector<Verdict> predicted;
    std::vector<bool> positive;
    std::unordered_map<std::string, bool> seen;
    for (const auto& r : results) {
        auto it = truth.find(r.trace_id);
        if (it == truth.end()) throw FormatError("no label for trace id '" + r.trace_id + "'");
        predicted.push_back(r.verdict);
        positive.push_back(it->second);
        seen.emplace(r.trace_id, true);
    }
    std::vector<std::string> stray;
    for (const auto& [id, label] : truth)
        if (!seen.contains(id)) stray.push_back(id);
    if (!stray.empty()) {
        std::sort(stray.begin(), stray.end());
        throw FormatError("labelled trace id '" + stray.front() + "' does not occur in the log");
    }
    return confusion(predicted, positive);
}

}  // namespace discover
