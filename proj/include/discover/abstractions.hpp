#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "discover/bitvector.hpp"
#include "discover/event_log.hpp"
#include "discover/relation.hpp"

namespace discover {

// ─── Log abstractions ─────────────────────────────────────────
// Per-activity bit vectors summarising the ordering behaviour of a log.
// Size is O(|A|^2) (O(|A|^3) for the between table), independent of the
// number of traces. Each field has an exact quantifier reading over the
// whole log; with a, b activities and "trace" ranging over the log:
//
//   at_most_once            a occurs at most once in every trace
//   precedence_for[b]   a:  every b is preceded (somewhere earlier) by an a
//   response_to[a]      b:  every a is eventually followed by a b
//   chain_precedence_for[b] a: every b sits directly after an a
//   alternate_precedence_for[b] a: every b has an a earlier with no b in between
//   predecessor[b]      a:  in some trace, an a occurs before some b
//   successor[a]        b:  in some trace, a b occurs after some a
//   immediately_follows[a] b: in some trace, b occurs directly after a
//   between(s, t)       u:  u not in {s,t} occurs strictly between an s and
//                           the next t after it, in some trace
//
// Self pairs follow the same readings (e.g. a in predecessor[a] iff a occurs
// twice in some trace; precedence_for[a] never contains a).
class LogAbstractions {
public:
    std::size_t activity_count() const noexcept { return n_; }

    const BitVector& at_most_once() const noexcept { return at_most_once_; }
    const BitVector& precedence_for(std::size_t target) const { return precedence_for_.at(target); }
    const BitVector& response_to(std::size_t source) const { return response_to_.at(source); }
    const BitVector& chain_precedence_for(std::size_t target) const { return chain_precedence_for_.at(target); }
    const BitVector& alternate_precedence_for(std::size_t target) const {
        return alternate_precedence_for_.at(target);
    }
    const BitVector& predecessor(std::size_t target) const { return predecessor_.at(target); }
    const BitVector& successor(std::size_t source) const { return successor_.at(source); }
    const BitVector& immediately_follows(std::size_t source) const { return immediately_follows_.at(source); }
    const BitVector& between(std::size_t s, std::size_t t) const { return between_.at(s * n_ + t); }

    // Template relations as (first, second) pair sets, matching the
    // argument order of the Declare templates, e.g. precedence() contains
    // (a, b) when a precedes every b.
    Relation response() const;
    Relation precedence() const;
    Relation chain_precedence() const;
    Relation alternate_precedence() const;
    Relation predecessors() const;
    Relation successors() const;
    Relation immediately_follows() const;

    friend LogAbstractions build_abstractions(const EventLog& log);

private:
    explicit LogAbstractions(std::size_t n);

    std::size_t n_ = 0;
    BitVector at_most_once_;
    std::vector<BitVector> precedence_for_;
    std::vector<BitVector> response_to_;
    std::vector<BitVector> chain_precedence_for_;
    std::vector<BitVector> alternate_precedence_for_;
    std::vector<BitVector> predecessor_;
    std::vector<BitVector> successor_;
    std::vector<BitVector> immediately_follows_;
    std::vector<BitVector> between_;  // row s * n + t
};

/// One forward and one backward sweep per trace; no pass revisits the log.
LogAbstractions build_abstractions(const EventLog& log);

/// Complement of immediately_follows, self pairs included.
Relation not_chain_succession(const LogAbstractions& abs);

/// Direct scan of the log for a single (s, t) pair. s == t is allowed and
/// yields the activities seen between two consecutive occurrences of s.
BitVector between(const EventLog& log, ActivityId s, ActivityId t);

/// Debug dump keyed by activity names: each relation as name -> [names].
nlohmann::json abstractions_to_json(const LogAbstractions& abs, const ActivityAlphabet& alphabet);

}  // namespace discover
