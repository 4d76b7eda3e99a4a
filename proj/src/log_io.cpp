#include "discover/log_io.hpp"

#include <expat.h>

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>

#include "discover/error.hpp"

namespace discover {

namespace {

// SAX state for the XES subset. Exceptions must not cross expat's C frames,
// so the first failure is stored and the parser is stopped.
struct XesReader {
    struct PendingTrace {
        std::optional<std::string> name;
        std::vector<std::string> labels;
        std::size_t line = 0;
        std::optional<std::size_t> unlabeled_event_line;
    };

    XML_Parser parser = nullptr;
    std::vector<std::string> stack;
    std::optional<PendingTrace> trace;
    std::optional<std::string> event_label;
    bool in_event = false;
    EventLogBuilder builder;
    std::optional<FormatError> failure;

    std::size_t line() const { return static_cast<std::size_t>(XML_GetCurrentLineNumber(parser)); }

    void fail(FormatError err) {
        if (!failure) failure = std::move(err);
        XML_StopParser(parser, XML_FALSE);
    }

    void on_start(const XML_Char* name, const XML_Char** attrs) {
        const std::string element(name);
        const std::string parent = stack.empty() ? std::string() : stack.back();
        stack.push_back(element);

        if (element == "trace") {
            trace = PendingTrace{};
            trace->line = line();
        } else if (element == "event" && trace && parent == "trace") {
            in_event = true;
            event_label.reset();
        } else if (element == "string") {
            const XML_Char* key = nullptr;
            const XML_Char* value = nullptr;
            for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
                if (std::strcmp(attrs[i], "key") == 0) key = attrs[i + 1];
                else if (std::strcmp(attrs[i], "value") == 0) value = attrs[i + 1];
            }
            if (key == nullptr || std::strcmp(key, "concept:name") != 0) return;
            if (parent == "event" && in_event) {
                if (value == nullptr) return;
                event_label = value;
            } else if (parent == "trace" && trace) {
                if (value != nullptr) trace->name = value;
            }
        }
    }

    void on_end(const XML_Char* name) {
        const std::string element(name);
        if (!stack.empty()) stack.pop_back();

        if (element == "event" && in_event) {
            in_event = false;
            if (!trace) return;
            if (event_label) {
                trace->labels.push_back(std::move(*event_label));
            } else if (!trace->unlabeled_event_line) {
                trace->unlabeled_event_line = line();
            }
            event_label.reset();
        } else if (element == "trace" && trace) {
            const std::string id = trace->name.value_or(std::to_string(builder.trace_count()));
            if (trace->unlabeled_event_line) {
                fail(FormatError("event without concept:name in trace '" + id + "'",
                                 *trace->unlabeled_event_line));
                return;
            }
            if (trace->labels.empty()) {
                fail(FormatError("trace '" + id + "' has no events", trace->line));
                return;
            }
            builder.add_trace(id, trace->labels);
            trace.reset();
        }
    }

    static void start_cb(void* self, const XML_Char* name, const XML_Char** attrs) {
        static_cast<XesReader*>(self)->on_start(name, attrs);
    }
    static void end_cb(void* self, const XML_Char* name) {
        static_cast<XesReader*>(self)->on_end(name);
    }
};

struct ParserDeleter {
    void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

}  // namespace

EventLog parse_xes(std::istream& in) {
    std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(XML_ParserCreate("UTF-8"));
    if (!parser) throw Error("cannot allocate XML parser");

    XesReader reader;
    reader.parser = parser.get();
    XML_SetUserData(parser.get(), &reader);
    XML_SetElementHandler(parser.get(), &XesReader::start_cb, &XesReader::end_cb);

    std::array<char, 1 << 16> buffer{};
    bool done = false;
    while (!done) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        const auto got = in.gcount();
        if (in.bad()) throw IoError("read failure while parsing XES");
        done = in.eof() || got == 0;
        if (XML_Parse(parser.get(), buffer.data(), static_cast<int>(got), done ? XML_TRUE : XML_FALSE) ==
            XML_STATUS_ERROR) {
            if (reader.failure) throw *reader.failure;
            throw ParseError(XML_ErrorString(XML_GetErrorCode(parser.get())),
                             static_cast<std::size_t>(XML_GetCurrentLineNumber(parser.get())),
                             static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser.get())) + 1);
        }
    }
    if (reader.failure) throw *reader.failure;
    return std::move(reader.builder).build();
}

EventLog parse_txt(std::istream& in, char delimiter) {
    EventLogBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string_view> tokens;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        tokens.clear();
        std::size_t start = 0;
        while (true) {
            const auto end = line.find(delimiter, start);
            const auto stop = end == std::string::npos ? line.size() : end;
            if (stop == start) throw FormatError("empty activity", line_no, start + 1);
            tokens.emplace_back(line.data() + start, stop - start);
            if (end == std::string::npos) break;
            start = end + 1;
        }
        builder.add_trace(std::to_string(builder.trace_count()), tokens);
    }
    if (in.bad()) throw IoError("read failure while parsing text log");
    return std::move(builder).build();
}

EventLog read_log(const std::filesystem::path& path, LogFormat format, char delimiter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open log '" + path.string() + "'");
    return format == LogFormat::Xes ? parse_xes(in) : parse_txt(in, delimiter);
}

void write_txt(const EventLog& log, std::ostream& out, char delimiter) {
    for (const auto& label : log.alphabet().names()) {
        if (label.empty() || label.find_first_of(std::string{delimiter, '\n', '\r'}) != std::string::npos)
            throw FormatError("label '" + label + "' cannot be written as text");
    }
    for (const auto& trace : log.traces()) {
        for (std::size_t i = 0; i < trace.events.size(); ++i) {
            if (i != 0) out << delimiter;
            out << log.alphabet().name(trace.events[i]);
        }
        out << '\n';
    }
}

ClassificationResult ClassificationResult::accepted(std::string id) {
    return {std::move(id), Verdict::Accepted, reason::None{}};
}

ClassificationResult ClassificationResult::rejected(std::string id, RejectionReason why) {
    return {std::move(id), Verdict::Rejected, std::move(why)};
}

std::string reason_code(const RejectionReason& why) {
    struct Visitor {
        std::string operator()(const reason::None&) const { return {}; }
        std::string operator()(const reason::DisabledEvent& r) const {
            return "disabled@" + std::to_string(r.position);
        }
        std::string operator()(const reason::NonAcceptingFinal&) const { return "nonaccepting"; }
        std::string operator()(const reason::UnknownActivity& r) const { return "unknown:" + r.label; }
    };
    return std::visit(Visitor{}, why);
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_classifications(const std::vector<ClassificationResult>& results, std::ostream& out) {
    out << "trace_id,verdict,reason\n";
    for (const auto& r : results) {
        out << csv_field(r.trace_id) << ',' << (r.verdict == Verdict::Accepted ? "ACCEPT" : "REJECT") << ','
            << csv_field(reason_code(r.reason)) << '\n';
    }
}

}  // namespace discover
