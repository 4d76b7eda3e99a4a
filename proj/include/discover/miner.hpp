#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "discover/abstractions.hpp"
#include "discover/dcr_graph.hpp"
#include "discover/event_log.hpp"
#include "discover/relation.hpp"

namespace discover {

enum class UnknownActivityPolicy { Reject, Error };

struct MinerConfig {
    /// Map at-most-once activities to self-exclusions only. When false, the
    /// full product AtMostOnce x AtMostOnce is excluded instead, which can
    /// reject training traces in which two such activities co-occur.
    bool self_exclusion_only = true;
    char txt_delimiter = ',';
    UnknownActivityPolicy unknown_activity = UnknownActivityPolicy::Reject;
};

/// The four relations under construction, all as (source, target) pairs
/// over activity ids. include and exclude stay disjoint throughout.
struct RelationSet {
    Relation condition;
    Relation response;
    Relation include;
    Relation exclude;

    explicit RelationSet(std::size_t n = 0) : condition(n), response(n), include(n), exclude(n) {}

    std::size_t activity_count() const noexcept { return condition.domain_size(); }
    std::size_t size() const { return condition.size() + response.size() + include.size() + exclude.size(); }

    friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

struct MiningDiagnostics {
    struct StageCounts {
        std::string stage;
        std::size_t conditions = 0;
        std::size_t responses = 0;
        std::size_t includes = 0;
        std::size_t excludes = 0;
    };
    /// A proposed include or exclude that collided with the opposite relation
    /// and was discarded; the earlier relation is kept.
    struct DroppedPair {
        std::string stage;
        std::string relation;  // "include" or "exclude"
        std::size_t source = 0;
        std::size_t target = 0;
    };

    std::vector<StageCounts> stages;
    std::vector<DroppedPair> dropped;

    void record(std::string stage, const RelationSet& rels);
    nlohmann::json to_json(const ActivityAlphabet& alphabet) const;
};

// ─── Pipeline stages ──────────────────────────────────────────
// Each stage takes the relation set by value and returns the updated set.

/// Self-exclusions from AtMostOnce, responses from Response, conditions from
/// Precedence, and ChainPrecedence evidence encoded as s -> +t plus t -> %t.
RelationSet stage_templates(const LogAbstractions& abs, const MinerConfig& config = {},
                            MiningDiagnostics* diag = nullptr);

/// NotCoExistence and NotSuccession exclusions; for every target activity at
/// most one exclusion per family, the lowest source id winning.
RelationSet stage_additional_excludes(const LogAbstractions& abs, RelationSet rels,
                                      MiningDiagnostics* diag = nullptr);

/// s -> %t for every pair never observed adjacent; every activity seen
/// between s and the next t re-includes t.
RelationSet stage_not_chain_succession(const LogAbstractions& abs, RelationSet rels,
                                       MiningDiagnostics* diag = nullptr);

/// Drops s -> %t when some u != s with u -> %t alternately precedes s.
/// Witnesses are taken from the exclusions as they stood on entry.
RelationSet stage_remove_redundant_excludes(const LogAbstractions& abs, RelationSet rels);

enum class ReductionScope { ConditionsAndResponses, ConditionsOnly };

RelationSet stage_transitive_reductions(RelationSet rels,
                                        ReductionScope scope = ReductionScope::ConditionsAndResponses);

/// Adds s -> *t when s precedes the first t in some trace and a replay that
/// tracks only inclusion finds s executed or excluded at every t of every trace.
RelationSet stage_additional_conditions(const EventLog& log, RelationSet rels);

DcrGraph to_graph(const ActivityAlphabet& alphabet, const RelationSet& rels);

/// Full discovery pipeline. The result replays every trace of log.
DcrGraph mine(const EventLog& log, const MinerConfig& config = {}, MiningDiagnostics* diag = nullptr);

}  // namespace discover
