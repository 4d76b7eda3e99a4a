#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "discover/bitvector.hpp"
#include "discover/relation.hpp"

namespace discover {

using EventId = std::size_t;

/// Runtime state (executed, pending, included). Any triple is legal.
struct Marking {
    BitVector executed;
    BitVector pending;
    BitVector included;

    static Marking initial(std::size_t n) { return {BitVector(n), BitVector(n), full_bits(n)}; }

    /// Included but not yet executed: the events that block the conditions they source.
    BitVector block_cond() const { return included - executed; }

    friend bool operator==(const Marking&, const Marking&) = default;
};

// ─── DCR graph ────────────────────────────────────────────────
// Events are dense ids with an injective label. Conditions are stored by
// target (conditions_for(e) = events that must be executed or excluded
// before e), the three effect relations by source.
class DcrGraph {
public:
    DcrGraph() = default;

    /// All events included, nothing executed or pending. Labels must be distinct.
    explicit DcrGraph(std::vector<std::string> labels);

    std::size_t event_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(EventId e) const { return labels_.at(e); }
    std::optional<EventId> find(std::string_view label) const;

    void add_condition(EventId source, EventId target);
    void add_response(EventId source, EventId target);
    /// ValidationError if (source, target) is already an exclude.
    void add_include(EventId source, EventId target);
    /// ValidationError if (source, target) is already an include.
    void add_exclude(EventId source, EventId target);

    const BitVector& conditions_for(EventId e) const { return conditions_for_.row(checked(e)); }
    const BitVector& responses_to(EventId e) const { return responses_to_.row(checked(e)); }
    const BitVector& excludes_to(EventId e) const { return excludes_to_.row(checked(e)); }
    const BitVector& includes_to(EventId e) const { return includes_to_.row(checked(e)); }

    // Relations as (source, target) pair sets.
    Relation conditions() const { return conditions_for_.transposed(); }
    const Relation& responses() const noexcept { return responses_to_; }
    const Relation& includes() const noexcept { return includes_to_; }
    const Relation& excludes() const noexcept { return excludes_to_; }

    const Marking& initial_marking() const noexcept { return initial_; }
    void set_initial_marking(Marking m);

    std::size_t relation_count() const;

    friend bool operator==(const DcrGraph&, const DcrGraph&) = default;

private:
    EventId checked(EventId e) const;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, EventId> index_;
    Relation conditions_for_;
    Relation responses_to_;
    Relation excludes_to_;
    Relation includes_to_;
    Marking initial_;
};

// ─── Execution semantics ──────────────────────────────────────
// Out-of-range ids throw std::out_of_range.

/// event is included and none of its conditions is included-but-unexecuted.
bool enabled(const DcrGraph& graph, const Marking& marking, EventId event);

/// Applies the effects of event without checking enabledness: mark executed,
/// clear its own pending bit, add responses, remove excludes, add includes
/// (in that order, so a self-response stays pending).
Marking execute(const DcrGraph& graph, const Marking& marking, EventId event);

/// In-place form of execute, used by replay loops.
void execute_in_place(const DcrGraph& graph, Marking& marking, EventId event);

/// No pending event is included.
bool is_accepting(const Marking& marking);

struct ReplayVerdict {
    enum class Outcome { Accepted, RejectedDisabled, RejectedNonAccepting };

    Outcome outcome = Outcome::Accepted;
    std::size_t position = 0;  // first disabled position when RejectedDisabled
    Marking final_marking;

    bool accepted() const noexcept { return outcome == Outcome::Accepted; }
};

/// Replays events from the initial marking; stops at the first disabled one.
ReplayVerdict replay(const DcrGraph& graph, std::span<const EventId> events);

}  // namespace discover
