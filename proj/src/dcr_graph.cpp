#include "discover/dcr_graph.hpp"

#include <stdexcept>

#include "discover/error.hpp"

namespace discover {

DcrGraph::DcrGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      conditions_for_(labels_.size()),
      responses_to_(labels_.size()),
      excludes_to_(labels_.size()),
      includes_to_(labels_.size()),
      initial_(Marking::initial(labels_.size())) {
    for (EventId e = 0; e < labels_.size(); ++e) {
        if (!index_.emplace(labels_[e], e).second)
            throw ValidationError("duplicate event label '" + labels_[e] + "'");
    }
}

std::optional<EventId> DcrGraph::find(std::string_view label) const {
    if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
    return std::nullopt;
}

EventId DcrGraph::checked(EventId e) const {
    if (e >= labels_.size())
        throw std::out_of_range("event id " + std::to_string(e) + " out of range");
    return e;
}

void DcrGraph::add_condition(EventId source, EventId target) {
    conditions_for_.insert(checked(target), checked(source));
}

void DcrGraph::add_response(EventId source, EventId target) {
    responses_to_.insert(checked(source), checked(target));
}

void DcrGraph::add_include(EventId source, EventId target) {
    if (excludes_to_.contains(checked(source), checked(target)))
        throw ValidationError("'" + labels_[source] + "' both includes and excludes '" + labels_[target] + "'");
    includes_to_.insert(source, target);
}

void DcrGraph::add_exclude(EventId source, EventId target) {
    if (includes_to_.contains(checked(source), checked(target)))
        throw ValidationError("'" + labels_[source] + "' both includes and excludes '" + labels_[target] + "'");
    excludes_to_.insert(source, target);
}

void DcrGraph::set_initial_marking(Marking m) {
    const auto n = labels_.size();
    if (m.executed.size() != n || m.pending.size() != n || m.included.size() != n)
        throw ValidationError("marking width does not match event count");
    initial_ = std::move(m);
}

std::size_t DcrGraph::relation_count() const {
    return conditions_for_.size() + responses_to_.size() + excludes_to_.size() + includes_to_.size();
}

bool enabled(const DcrGraph& graph, const Marking& marking, EventId event) {
    const auto& conditions = graph.conditions_for(event);
    if (!marking.included.test(event)) return false;
    // Blocked by any included condition that has not been executed.
    return !conditions.intersects(marking.included - marking.executed);
}

void execute_in_place(const DcrGraph& graph, Marking& marking, EventId event) {
    const auto& responses = graph.responses_to(event);
    marking.executed.set(event);
    marking.pending.reset(event);
    marking.pending |= responses;
    marking.included -= graph.excludes_to(event);
    marking.included |= graph.includes_to(event);
}

Marking execute(const DcrGraph& graph, const Marking& marking, EventId event) {
    Marking next = marking;
    execute_in_place(graph, next, event);
    return next;
}

bool is_accepting(const Marking& marking) { return !marking.pending.intersects(marking.included); }

ReplayVerdict replay(const DcrGraph& graph, std::span<const EventId> events) {
    ReplayVerdict verdict;
    verdict.final_marking = graph.initial_marking();
    auto& m = verdict.final_marking;
    BitVector blocking(graph.event_count());
    for (std::size_t i = 0; i < events.size(); ++i) {
        const EventId e = events[i];
        const auto& conditions = graph.conditions_for(e);
        blocking = m.included;
        blocking -= m.executed;
        if (!m.included.test(e) || conditions.intersects(blocking)) {
            verdict.outcome = ReplayVerdict::Outcome::RejectedDisabled;
            verdict.position = i;
            return verdict;
        }
        execute_in_place(graph, m, e);
    }
    verdict.outcome = is_accepting(m) ? ReplayVerdict::Outcome::Accepted
                                      : ReplayVerdict::Outcome::RejectedNonAccepting;
    return verdict;
}

}  // namespace discover
