#include "discover/miner.hpp"

#include "discover/transitive_reduction.hpp"

namespace discover {

namespace {

// Include/exclude insertion that keeps the two relations disjoint. The pair
// already present in the opposite relation wins.
void propose_exclude(RelationSet& rels, std::size_t s, std::size_t t, const char* stage, MiningDiagnostics* diag) {
    if (rels.include.contains(s, t)) {
        if (diag != nullptr) diag->dropped.push_back({stage, "exclude", s, t});
        return;
    }
    rels.exclude.insert(s, t);
}

void propose_include(RelationSet& rels, std::size_t s, std::size_t t, const char* stage, MiningDiagnostics* diag) {
    if (rels.exclude.contains(s, t)) {
        if (diag != nullptr) diag->dropped.push_back({stage, "include", s, t});
        return;
    }
    rels.include.insert(s, t);
}

}  // namespace

void MiningDiagnostics::record(std::string stage, const RelationSet& rels) {
    stages.push_back({std::move(stage), rels.condition.size(), rels.response.size(), rels.include.size(),
                      rels.exclude.size()});
}

nlohmann::json MiningDiagnostics::to_json(const ActivityAlphabet& alphabet) const {
    using nlohmann::json;
    json out = json::object();
    json stage_arr = json::array();
    for (const auto& s : stages) {
        stage_arr.push_back({{"stage", s.stage},
                             {"conditions", s.conditions},
                             {"responses", s.responses},
                             {"includes", s.includes},
                             {"excludes", s.excludes}});
    }
    json dropped_arr = json::array();
    for (const auto& d : dropped) {
        dropped_arr.push_back({{"stage", d.stage},
                               {"relation", d.relation},
                               {"source", alphabet.name(static_cast<ActivityId>(d.source))},
                               {"target", alphabet.name(static_cast<ActivityId>(d.target))}});
    }
    out["stages"] = std::move(stage_arr);
    out["dropped"] = std::move(dropped_arr);
    return out;
}

RelationSet stage_templates(const LogAbstractions& abs, const MinerConfig& config, MiningDiagnostics* diag) {
    const std::size_t n = abs.activity_count();
    RelationSet rels(n);
    constexpr const char* stage = "templates";

    const auto& amo = abs.at_most_once();
    for_each_bit(amo, [&](std::size_t s) {
        if (config.self_exclusion_only) {
            rels.exclude.insert(s, s);
        } else {
            for_each_bit(amo, [&](std::size_t t) { rels.exclude.insert(s, t); });
        }
    });

    for (std::size_t s = 0; s < n; ++s) {
        rels.response.row(s) = abs.response_to(s);
        rels.response.erase(s, s);
    }
    for (std::size_t t = 0; t < n; ++t) {
        for_each_bit(abs.precedence_for(t), [&](std::size_t s) {
            if (s != t) rels.condition.insert(s, t);
        });
    }

    // ChainPrecedence evidence, encoded as AlternatePrecedence.
    for (std::size_t t = 0; t < n; ++t)
        for_each_bit(abs.chain_precedence_for(t), [&](std::size_t s) {
            if (s != t) propose_include(rels, s, t, stage, diag);
        });
    for (std::size_t t = 0; t < n; ++t) {
        BitVector sources = abs.chain_precedence_for(t);
        sources.reset(t);
        if (sources.any()) propose_exclude(rels, t, t, stage, diag);
    }
    return rels;
}

RelationSet stage_additional_excludes(const LogAbstractions& abs, RelationSet rels, MiningDiagnostics* diag) {
    const std::size_t n = abs.activity_count();
    constexpr const char* stage = "additional_excludes";

    // NotCoExistence: s never before and never after t.
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t s = 0; s < n; ++s) {
            if (s == t || abs.predecessor(t).test(s) || abs.successor(t).test(s)) continue;
            propose_exclude(rels, s, t, stage, diag);
            break;
        }
    }

    // NotSuccession: s seen before t but never after it, and s not already
    // self-excluding; t then excludes s.
    for (std::size_t s = 0; s < n; ++s) {
        if (rels.exclude.contains(s, s)) continue;
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t || !abs.predecessor(t).test(s) || abs.successor(t).test(s)) continue;
            propose_exclude(rels, t, s, stage, diag);
            break;
        }
    }
    return rels;
}

RelationSet stage_not_chain_succession(const LogAbstractions& abs, RelationSet rels, MiningDiagnostics* diag) {
    const std::size_t n = abs.activity_count();
    constexpr const char* stage = "not_chain_succession";
    const Relation ncs = not_chain_succession(abs);

    for (const auto& [s, t] : ncs.pairs()) propose_exclude(rels, s, t, stage, diag);
    for (std::size_t s = 0; s < n; ++s) {
        for_each_bit(ncs.row(s), [&](std::size_t t) {
            for_each_bit(abs.between(s, t), [&](std::size_t u) { propose_include(rels, u, t, stage, diag); });
        });
    }
    return rels;
}

RelationSet stage_remove_redundant_excludes(const LogAbstractions& abs, RelationSet rels) {
    const std::size_t n = abs.activity_count();
    const Relation excluders_of = rels.exclude.transposed();  // row t: every u with u -> %t

    for (std::size_t s = 0; s < n; ++s) {
        BitVector witnesses = abs.alternate_precedence_for(s);
        witnesses.reset(s);
        if (witnesses.none()) continue;
        BitVector& row = rels.exclude.row(s);
        BitVector keep = row;
        for_each_bit(row, [&](std::size_t t) {
            if (excluders_of.row(t).intersects(witnesses)) keep.reset(t);
        });
        row = std::move(keep);
    }
    return rels;
}

RelationSet stage_transitive_reductions(RelationSet rels, ReductionScope scope) {
    rels.condition = transitive_reduction(rels.condition);
    if (scope == ReductionScope::ConditionsAndResponses) rels.response = transitive_reduction(rels.response);
    return rels;
}

RelationSet stage_additional_conditions(const EventLog& log, RelationSet rels) {
    const std::size_t n = log.activity_count();
    std::vector<BitVector> candidates(n, BitVector(n));  // by target
    std::vector<BitVector> violators(n, BitVector(n));   // by target

    BitVector executed(n);
    BitVector included(n);
    for (const auto& trace : log.traces()) {
        executed.reset();
        included.set();
        for (const ActivityId t : trace.events) {
            if (!executed.test(t)) candidates[t] |= executed;
            BitVector blocking = included;
            blocking -= executed;
            violators[t] |= blocking;

            executed.set(t);
            included -= rels.exclude.row(t);
            included |= rels.include.row(t);
        }
    }

    const Relation existing = rels.condition.transposed();
    for (std::size_t t = 0; t < n; ++t) {
        BitVector admitted = candidates[t];
        admitted -= violators[t];
        admitted -= existing.row(t);
        admitted.reset(t);
        for_each_bit(admitted, [&](std::size_t s) { rels.condition.insert(s, t); });
    }
    return rels;
}

DcrGraph to_graph(const ActivityAlphabet& alphabet, const RelationSet& rels) {
    DcrGraph graph(alphabet.names());
    for (const auto& [s, t] : rels.condition.pairs()) graph.add_condition(s, t);
    for (const auto& [s, t] : rels.response.pairs()) graph.add_response(s, t);
    for (const auto& [s, t] : rels.exclude.pairs()) graph.add_exclude(s, t);
    for (const auto& [s, t] : rels.include.pairs()) graph.add_include(s, t);
    return graph;
}

DcrGraph mine(const EventLog& log, const MinerConfig& config, MiningDiagnostics* diag) {
    const LogAbstractions abs = build_abstractions(log);
    auto note = [&](const char* stage, const RelationSet& rels) {
        if (diag != nullptr) diag->record(stage, rels);
    };

    RelationSet rels = stage_templates(abs, config, diag);
    note("templates", rels);
    rels = stage_additional_excludes(abs, std::move(rels), diag);
    note("additional_excludes", rels);
    rels = stage_not_chain_succession(abs, std::move(rels), diag);
    note("not_chain_succession", rels);
    rels = stage_remove_redundant_excludes(abs, std::move(rels));
    note("remove_redundant_excludes", rels);
    rels = stage_transitive_reductions(std::move(rels));
    note("transitive_reduction", rels);
    rels = stage_additional_conditions(log, std::move(rels));
    note("additional_conditions", rels);
    rels = stage_transitive_reductions(std::move(rels), ReductionScope::ConditionsOnly);
    note("final_condition_reduction", rels);

    return to_graph(log.alphabet(), rels);
}

}  // namespace discover
