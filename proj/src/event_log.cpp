#include "discover/event_log.hpp"

#include <numeric>

#include "discover/error.hpp"

namespace discover {

ActivityId ActivityAlphabet::intern(std::string_view label) {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    const auto id = static_cast<ActivityId>(names_.size());
    names_.emplace_back(label);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<ActivityId> ActivityAlphabet::find(std::string_view label) const {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    return std::nullopt;
}

std::size_t EventLog::event_count() const {
    return std::accumulate(traces_.begin(), traces_.end(), std::size_t{0},
                           [](std::size_t acc, const Trace& t) { return acc + t.events.size(); });
}

EventLog EventLog::from_labels(const std::vector<std::vector<std::string>>& traces) {
    EventLogBuilder builder;
    for (std::size_t i = 0; i < traces.size(); ++i) builder.add_trace(std::to_string(i), traces[i]);
    return std::move(builder).build();
}

namespace {

template <typename Label>
void append_trace(ActivityAlphabet& alphabet, std::vector<Trace>& traces, std::string id,
                  std::span<const Label> labels) {
    if (labels.empty()) throw FormatError("trace '" + id + "' is empty");
    Trace trace{std::move(id), {}};
    trace.events.reserve(labels.size());
    for (const auto& label : labels) trace.events.push_back(alphabet.intern(label));
    traces.push_back(std::move(trace));
}

}  // namespace

void EventLogBuilder::add_trace(std::string id, std::span<const std::string> labels) {
    append_trace(log_.alphabet_, log_.traces_, std::move(id), labels);
}

void EventLogBuilder::add_trace(std::string id, std::span<const std::string_view> labels) {
    append_trace(log_.alphabet_, log_.traces_, std::move(id), labels);
}

EventLog EventLogBuilder::build() && { return std::move(log_); }

}  // namespace discover
