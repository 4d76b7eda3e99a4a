#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace discover {

using ActivityId = std::uint32_t;

/// Dense, insertion-ordered label <-> id bijection.
class ActivityAlphabet {
public:
    /// Returns the id of label, assigning the next free id on first sight.
    ActivityId intern(std::string_view label);

    std::optional<ActivityId> find(std::string_view label) const;
    const std::string& name(ActivityId id) const { return names_.at(id); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }

    friend bool operator==(const ActivityAlphabet& a, const ActivityAlphabet& b) {
        return a.names_ == b.names_;
    }

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::vector<std::string> names_;
    std::unordered_map<std::string, ActivityId, StringHash, std::equal_to<>> index_;
};

struct Trace {
    std::string id;
    std::vector<ActivityId> events;

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Multiset of non-empty traces over an alphabet containing exactly the
/// activities that occur. Immutable once built; use EventLogBuilder.
class EventLog {
public:
    EventLog() = default;

    const ActivityAlphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Trace>& traces() const noexcept { return traces_; }
    std::size_t activity_count() const noexcept { return alphabet_.size(); }
    std::size_t trace_count() const noexcept { return traces_.size(); }
    std::size_t event_count() const;
    bool empty() const noexcept { return traces_.empty(); }

    /// Convenience for tests and generators: one trace per inner vector,
    /// ids are 0-based ordinals.
    static EventLog from_labels(const std::vector<std::vector<std::string>>& traces);

    friend bool operator==(const EventLog&, const EventLog&) = default;

private:
    friend class EventLogBuilder;
    ActivityAlphabet alphabet_;
    std::vector<Trace> traces_;
};

class EventLogBuilder {
public:
    /// Throws FormatError if labels is empty.
    void add_trace(std::string id, std::span<const std::string> labels);
    void add_trace(std::string id, std::span<const std::string_view> labels);

    std::size_t trace_count() const noexcept { return log_.traces_.size(); }

    EventLog build() &&;

private:
    EventLog log_;
};

}  // namespace discover
