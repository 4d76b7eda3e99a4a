#pragma once

// Slow, obviously-correct reference implementations. Everything here works on
// plain std::set / std::vector so it shares no code with the library kernels.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "discover/event_log.hpp"

namespace oracle {

using Pair = std::pair<std::size_t, std::size_t>;
using PairSet = std::set<Pair>;
using IdSet = std::set<std::size_t>;
using Trace = std::vector<std::size_t>;
using Traces = std::vector<Trace>;

inline Traces traces_of(const discover::EventLog& log) {
    Traces out;
    for (const auto& t : log.traces()) out.emplace_back(t.events.begin(), t.events.end());
    return out;
}

inline std::size_t count(const Trace& tr, std::size_t a) {
    return static_cast<std::size_t>(std::count(tr.begin(), tr.end(), a));
}

// ─── abstractions, one quantifier definition each ─────────────

inline IdSet at_most_once(const Traces& L, std::size_t n) {
    IdSet out;
    for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        for (const auto& tr : L) ok = ok && count(tr, a) <= 1;
        if (ok) out.insert(a);
    }
    return out;
}

// every occurrence of t has some s strictly earlier
inline bool precedence(const Traces& L, std::size_t s, std::size_t t) {
    for (const auto& tr : L)
        for (std::size_t j = 0; j < tr.size(); ++j) {
            if (tr[j] != t) continue;
            bool found = false;
            for (std::size_t i = 0; i < j; ++i) found = found || tr[i] == s;
            if (!found) return false;
        }
    return true;
}

// every occurrence of s has some t strictly later
inline bool response(const Traces& L, std::size_t s, std::size_t t) {
    for (const auto& tr : L)
        for (std::size_t i = 0; i < tr.size(); ++i) {
            if (tr[i] != s) continue;
            bool found = false;
            for (std::size_t j = i + 1; j < tr.size(); ++j) found = found || tr[j] == t;
            if (!found) return false;
        }
    return true;
}

// every occurrence of t sits directly after an s
inline bool chain_precedence(const Traces& L, std::size_t s, std::size_t t) {
    for (const auto& tr : L)
        for (std::size_t j = 0; j < tr.size(); ++j)
            if (tr[j] == t && (j == 0 || tr[j - 1] != s)) return false;
    return true;
}

// every occurrence of t has an s after the previous t
inline bool alternate_precedence(const Traces& L, std::size_t s, std::size_t t) {
    for (const auto& tr : L)
        for (std::size_t j = 0; j < tr.size(); ++j) {
            if (tr[j] != t) continue;
            bool found = false;
            for (std::size_t i = j; i-- > 0 && tr[i] != t;) found = found || tr[i] == s;
            if (!found) return false;
        }
    return true;
}

// some trace has s before t
inline bool precedes_somewhere(const Traces& L, std::size_t s, std::size_t t) {
    for (const auto& tr : L)
        for (std::size_t i = 0; i < tr.size(); ++i)
            for (std::size_t j = i + 1; j < tr.size(); ++j)
                if (tr[i] == s && tr[j] == t) return true;
    return false;
}

inline bool adjacent_somewhere(const Traces& L, std::size_t s, std::size_t t) {
    for (const auto& tr : L)
        for (std::size_t i = 0; i + 1 < tr.size(); ++i)
            if (tr[i] == s && tr[i + 1] == t) return true;
    return false;
}

// u (not s, not t) at k with s at i, t at j, i < k < j and no t in (i, j)
inline IdSet between(const Traces& L, std::size_t s, std::size_t t) {
    IdSet out;
    for (const auto& tr : L)
        for (std::size_t i = 0; i < tr.size(); ++i) {
            if (tr[i] != s) continue;
            for (std::size_t j = i + 1; j < tr.size(); ++j) {
                if (tr[j] != t) continue;
                for (std::size_t k = i + 1; k < j; ++k)
                    if (tr[k] != s && tr[k] != t) out.insert(tr[k]);
                break;  // only the next t after this s
            }
        }
    return out;
}

template <class Pred>
PairSet pairs_where(std::size_t n, Pred&& pred) {
    PairSet out;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (pred(s, t)) out.insert({s, t});
    return out;
}

// ─── naive set-based DCR semantics ────────────────────────────

struct Graph {
    std::size_t n = 0;
    PairSet condition, response, include, exclude;  // all (source, target)
};

struct Marking {
    IdSet executed, pending, included;
    bool operator==(const Marking&) const = default;
};

inline bool enabled(const Graph& g, const Marking& m, std::size_t e) {
    if (!m.included.contains(e)) return false;
    for (const auto& [c, t] : g.condition)
        if (t == e && m.included.contains(c) && !m.executed.contains(c)) return false;
    return true;
}

inline Marking execute(const Graph& g, Marking m, std::size_t e) {
    m.executed.insert(e);
    m.pending.erase(e);
    for (const auto& [s, t] : g.response)
        if (s == e) m.pending.insert(t);
    for (const auto& [s, t] : g.exclude)
        if (s == e) m.included.erase(t);
    for (const auto& [s, t] : g.include)
        if (s == e) m.included.insert(t);
    return m;
}

inline bool accepting(const Marking& m) {
    for (auto p : m.pending)
        if (m.included.contains(p)) return false;
    return true;
}

// ─── reachability ─────────────────────────────────────────────

/// reach[a][b]: a path of one or more edges from a to b.
inline std::vector<std::vector<bool>> closure(std::size_t n, const PairSet& edges) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : edges) r[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

// ─── metrics ──────────────────────────────────────────────────

/// Pearson correlation of two equally long 0/1 vectors; 0 if either is constant.
inline double pearson(const std::vector<int>& x, const std::vector<int>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0 || syy == 0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

// ─── miner stages over sets ───────────────────────────────────

struct Rels {
    PairSet condition, response, include, exclude;
    bool operator==(const Rels&) const = default;
};

// Earlier relation wins on include/exclude collisions.
inline void add_exclude(Rels& r, Pair p) {
    if (!r.include.contains(p)) r.exclude.insert(p);
}
inline void add_include(Rels& r, Pair p) {
    if (!r.exclude.contains(p)) r.include.insert(p);
}

inline Rels templates(const Traces& L, std::size_t n, bool self_only) {
    Rels r;
    const IdSet amo = at_most_once(L, n);
    for (auto s : amo)
        for (auto t : amo)
            if (!self_only || s == t) r.exclude.insert({s, t});
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t) continue;
            if (response(L, s, t)) r.response.insert({s, t});
            if (precedence(L, s, t)) r.condition.insert({s, t});
        }
    std::vector<Pair> chain;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (s != t && chain_precedence(L, s, t)) chain.push_back({s, t});
    for (const auto& p : chain) add_include(r, p);
    for (const auto& [s, t] : chain) add_exclude(r, {t, t});
    return r;
}

inline Rels additional_excludes(const Traces& L, std::size_t n, Rels r) {
    // NotCoExistence, first source per target
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s) {
            if (s == t || precedes_somewhere(L, s, t) || precedes_somewhere(L, t, s)) continue;
            add_exclude(r, {s, t});
            break;
        }
    // NotSuccession: s before t somewhere, never after; t excludes s
    const PairSet self = r.exclude;
    for (std::size_t s = 0; s < n; ++s) {
        if (self.contains({s, s})) continue;
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t || !precedes_somewhere(L, s, t) || precedes_somewhere(L, t, s)) continue;
            add_exclude(r, {t, s});
            break;
        }
    }
    return r;
}

inline Rels not_chain_succession(const Traces& L, std::size_t n, Rels r) {
    const PairSet ncs = pairs_where(n, [&](std::size_t s, std::size_t t) { return !adjacent_somewhere(L, s, t); });
    for (const auto& p : ncs) add_exclude(r, p);
    for (const auto& [s, t] : ncs)
        for (auto u : between(L, s, t)) add_include(r, {u, t});
    return r;
}

inline Rels remove_redundant_excludes(const Traces& L, Rels r) {
    const PairSet before = r.exclude;
    for (const auto& [s, t] : before)
        for (const auto& [u, t2] : before)
            if (t2 == t && u != s && alternate_precedence(L, u, s)) {
                r.exclude.erase({s, t});
                break;
            }
    return r;
}

/// True when no edge can be dropped without losing reachability. Only valid
/// for acyclic relations: (a,c) is redundant iff another edge (a,b) reaches c.
inline bool dag_minimal(std::size_t n, const PairSet& edges) {
    const auto reach = closure(n, edges);
    for (const auto& [a, c] : edges)
        for (const auto& [a2, b] : edges)
            if (a2 == a && b != c && reach[b][c]) return false;
    return true;
}

/// DAG-only transitive reduction: drop (a,c) when some b has a ->+ b ->+ c.
inline PairSet dag_reduction(std::size_t n, const PairSet& edges) {
    const auto reach = closure(n, edges);
    PairSet out;
    for (const auto& [a, c] : edges) {
        bool redundant = false;
        for (std::size_t b = 0; b < n && !redundant; ++b) redundant = b != a && b != c && reach[a][b] && reach[b][c];
        if (!redundant) out.insert({a, c});
    }
    return out;
}

// s before the first t in some trace
inline bool condition_candidate(const Traces& L, std::size_t s, std::size_t t) {
    for (const auto& tr : L) {
        const auto first_t = std::find(tr.begin(), tr.end(), t);
        if (first_t != tr.end() && std::find(tr.begin(), first_t, s) != first_t) return true;
    }
    return false;
}

// at every t, s executed or not included, replaying only include/exclude effects
inline bool condition_admitted(const Traces& L, std::size_t n, const Rels& r, std::size_t s, std::size_t t) {
    for (const auto& tr : L) {
        IdSet executed;
        IdSet included;
        for (std::size_t a = 0; a < n; ++a) included.insert(a);
        for (auto e : tr) {
            if (e == t && !executed.contains(s) && included.contains(s)) return false;
            executed.insert(e);
            for (const auto& [x, y] : r.exclude)
                if (x == e) included.erase(y);
            for (const auto& [x, y] : r.include)
                if (x == e) included.insert(y);
        }
    }
    return true;
}

inline Rels additional_conditions(const Traces& L, std::size_t n, Rels r) {
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (s != t && !r.condition.contains({s, t}) && condition_candidate(L, s, t) &&
                condition_admitted(L, n, r, s, t))
                r.condition.insert({s, t});
    return r;
}

}  // namespace oracle
