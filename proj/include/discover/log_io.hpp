#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "discover/event_log.hpp"

namespace discover {

// ─── Event log readers ────────────────────────────────────────
//
// XES: a minimal subset. Each <trace> becomes a trace, each <event> an
// activity occurrence labelled by its <string key="concept:name">. Every
// other attribute (lifecycle, time, data) is skipped; events are taken in
// document order. The trace id is the trace-level concept:name, or the
// 0-based trace ordinal when absent.
//
// Text: one trace per line, activities separated by a single delimiter.
// Blank lines are skipped. Trace ids are 0-based ordinals of the non-blank
// lines, which makes a text log and the equivalent unnamed XES log equal.

enum class LogFormat { Xes, Txt };

EventLog parse_xes(std::istream& in);
EventLog parse_txt(std::istream& in, char delimiter = ',');

/// Reads a log from disk. IoError if the file cannot be opened.
EventLog read_log(const std::filesystem::path& path, LogFormat format, char delimiter = ',');

/// Inverse of parse_txt. FormatError if a label is empty or contains the
/// delimiter or a line break.
void write_txt(const EventLog& log, std::ostream& out, char delimiter = ',');

// ─── Classification results ───────────────────────────────────

enum class Verdict { Accepted, Rejected };

namespace reason {
struct None {
    friend bool operator==(None, None) = default;
};
struct DisabledEvent {
    std::size_t position;
    friend bool operator==(const DisabledEvent&, const DisabledEvent&) = default;
};
struct NonAcceptingFinal {
    friend bool operator==(NonAcceptingFinal, NonAcceptingFinal) = default;
};
struct UnknownActivity {
    std::string label;
    friend bool operator==(const UnknownActivity&, const UnknownActivity&) = default;
};
}  // namespace reason

using RejectionReason =
    std::variant<reason::None, reason::DisabledEvent, reason::NonAcceptingFinal, reason::UnknownActivity>;

/// Reason is None iff the verdict is Accepted.
struct ClassificationResult {
    std::string trace_id;
    Verdict verdict = Verdict::Accepted;
    RejectionReason reason = reason::None{};

    static ClassificationResult accepted(std::string id);
    static ClassificationResult rejected(std::string id, RejectionReason why);

    friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

/// "", "disabled@<pos>", "nonaccepting" or "unknown:<label>".
std::string reason_code(const RejectionReason& why);

/// CSV with header `trace_id,verdict,reason`, one row per result in order.
void write_classifications(const std::vector<ClassificationResult>& results, std::ostream& out);

/// RFC 4180 quoting when the field contains a comma, quote or line break.
std::string csv_field(const std::string& value);

}  // namespace discover
