#include "discover/abstractions.hpp"

namespace discover {

LogAbstractions::LogAbstractions(std::size_t n)
    : n_(n),
      at_most_once_(full_bits(n)),
      precedence_for_(n, full_bits(n)),
      response_to_(n, full_bits(n)),
      chain_precedence_for_(n, full_bits(n)),
      alternate_precedence_for_(n, full_bits(n)),
      predecessor_(n, BitVector(n)),
      successor_(n, BitVector(n)),
      immediately_follows_(n, BitVector(n)),
      between_(n * n, BitVector(n)) {}

namespace {

Relation rows_as_relation(const std::vector<BitVector>& rows) {
    Relation rel(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rel.row(i) = rows[i];
    return rel;
}

}  // namespace

Relation LogAbstractions::response() const { return rows_as_relation(response_to_); }
Relation LogAbstractions::precedence() const { return rows_as_relation(precedence_for_).transposed(); }
Relation LogAbstractions::chain_precedence() const {
    return rows_as_relation(chain_precedence_for_).transposed();
}
Relation LogAbstractions::alternate_precedence() const {
    return rows_as_relation(alternate_precedence_for_).transposed();
}
Relation LogAbstractions::predecessors() const { return rows_as_relation(predecessor_).transposed(); }
Relation LogAbstractions::successors() const { return rows_as_relation(successor_); }
Relation LogAbstractions::immediately_follows() const { return rows_as_relation(immediately_follows_); }

LogAbstractions build_abstractions(const EventLog& log) {
    const std::size_t n = log.activity_count();
    LogAbstractions abs(n);

    BitVector seen(n);
    BitVector window(n);
    BitVector suffix(n);
    std::vector<std::ptrdiff_t> last_pos(n, -1);

    for (const auto& trace : log.traces()) {
        const auto& ev = trace.events;
        seen.reset();
        std::fill(last_pos.begin(), last_pos.end(), -1);

        for (std::size_t j = 0; j < ev.size(); ++j) {
            const std::size_t t = ev[j];

            abs.predecessor_[t] |= seen;
            if (seen.test(t)) abs.at_most_once_.reset(t);
            abs.precedence_for_[t] &= seen;

            auto& chain = abs.chain_precedence_for_[t];
            if (j == 0) {
                chain.reset();
            } else {
                const std::size_t prev = ev[j - 1];
                const bool kept = chain.test(prev);
                chain.reset();
                if (kept) chain.set(prev);
                abs.immediately_follows_[prev].set(t);
            }

            // Walk the window since the previous t. Each position is visited
            // at most once per later distinct activity, so the cost stays
            // linear in trace length for a fixed alphabet.
            window.reset();
            const std::ptrdiff_t p = last_pos[t];
            for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(j) - 1; k > p; --k) {
                const std::size_t s = ev[static_cast<std::size_t>(k)];
                auto& cell = abs.between_[s * n + t];
                cell |= window;
                cell.reset(s);
                window.set(s);
            }
            abs.alternate_precedence_for_[t] &= window;
            if (p >= 0) abs.between_[t * n + t] |= window;

            seen.set(t);
            last_pos[t] = static_cast<std::ptrdiff_t>(j);
        }

        suffix.reset();
        for (std::size_t j = ev.size(); j-- > 0;) {
            const std::size_t s = ev[j];
            abs.response_to_[s] &= suffix;
            abs.successor_[s] |= suffix;
            suffix.set(s);
        }
    }
    return abs;
}

Relation not_chain_succession(const LogAbstractions& abs) {
    Relation rel(abs.activity_count());
    for (std::size_t s = 0; s < abs.activity_count(); ++s) rel.row(s) = ~abs.immediately_follows(s);
    return rel;
}

BitVector between(const EventLog& log, ActivityId s, ActivityId t) {
    const std::size_t n = log.activity_count();
    BitVector result(n);
    BitVector acc(n);
    for (const auto& trace : log.traces()) {
        bool open = false;
        acc.reset();
        for (const ActivityId x : trace.events) {
            if (x == t) {
                if (open) result |= acc;
                open = (s == t);
                acc.reset();
            } else if (x == s) {
                if (!open) {
                    open = true;
                    acc.reset();
                }
            } else if (open) {
                acc.set(x);
            }
        }
    }
    if (s < n) result.reset(s);
    if (t < n) result.reset(t);
    return result;
}

nlohmann::json abstractions_to_json(const LogAbstractions& abs, const ActivityAlphabet& alphabet) {
    using nlohmann::json;
    const std::size_t n = abs.activity_count();
    auto names = [&](const BitVector& bits) {
        json arr = json::array();
        for_each_bit(bits, [&](std::size_t i) { arr.push_back(alphabet.name(static_cast<ActivityId>(i))); });
        return arr;
    };
    auto per_activity = [&](auto&& get) {
        json obj = json::object();
        for (std::size_t i = 0; i < n; ++i) obj[alphabet.name(static_cast<ActivityId>(i))] = names(get(i));
        return obj;
    };

    json out = json::object();
    out["atMostOnce"] = names(abs.at_most_once());
    out["precedenceFor"] = per_activity([&](std::size_t i) -> const BitVector& { return abs.precedence_for(i); });
    out["responseTo"] = per_activity([&](std::size_t i) -> const BitVector& { return abs.response_to(i); });
    out["chainPrecedenceFor"] =
        per_activity([&](std::size_t i) -> const BitVector& { return abs.chain_precedence_for(i); });
    out["alternatePrecedenceFor"] =
        per_activity([&](std::size_t i) -> const BitVector& { return abs.alternate_precedence_for(i); });
    out["predecessor"] = per_activity([&](std::size_t i) -> const BitVector& { return abs.predecessor(i); });
    out["successor"] = per_activity([&](std::size_t i) -> const BitVector& { return abs.successor(i); });
    out["immediatelyFollows"] =
        per_activity([&](std::size_t i) -> const BitVector& { return abs.immediately_follows(i); });

    json between = json::object();
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (abs.between(s, t).none()) continue;
            between[alphabet.name(static_cast<ActivityId>(s))][alphabet.name(static_cast<ActivityId>(t))] =
                names(abs.between(s, t));
        }
    }
    out["between"] = between;
    return out;
}

}  // namespace discover
