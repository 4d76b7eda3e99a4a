#include "discover/transitive_reduction.hpp"

#include <algorithm>
#include <limits>

namespace discover {

std::vector<std::size_t> strongly_connected_components(const Relation& rel, std::size_t* count) {
    // Iterative Tarjan.
    constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = rel.domain_size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t next_index = 0;
    std::size_t next_comp = 0;

    struct Frame {
        std::size_t node;
        std::size_t cursor;  // next successor candidate
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto& frame = call.back();
            const auto& succ = rel.row(frame.node);
            auto w = frame.cursor == 0 ? succ.find_first() : succ.find_next(frame.cursor - 1);
            if (w != BitVector::npos) {
                frame.cursor = w + 1;
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[frame.node] = std::min(low[frame.node], index[w]);
                }
                continue;
            }

            const std::size_t v = frame.node;
            call.pop_back();
            if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
            if (low[v] == index[v]) {
                std::size_t w2;
                do {
                    w2 = stack.back();
                    stack.pop_back();
                    on_stack[w2] = false;
                    comp[w2] = next_comp;
                } while (w2 != v);
                ++next_comp;
            }
        }
    }
    if (count != nullptr) *count = next_comp;
    return comp;
}

Relation transitive_reduction(const Relation& rel) {
    const std::size_t n = rel.domain_size();
    std::size_t k = 0;
    const auto comp = strongly_connected_components(rel, &k);

    Relation condensed(k);
    for (const auto& [a, c] : rel.pairs())
        if (comp[a] != comp[c]) condensed.insert(comp[a], comp[c]);

    // Components come sinks-first, so every successor's reach set is ready.
    std::vector<BitVector> reach(k, BitVector(k));
    for (std::size_t c = 0; c < k; ++c) {
        for_each_bit(condensed.row(c), [&](std::size_t d) {
            reach[c].set(d);
            reach[c] |= reach[d];
        });
    }

    Relation redundant(k);
    for (std::size_t a = 0; a < k; ++a) {
        for_each_bit(condensed.row(a), [&](std::size_t b) {
            BitVector via = reach[b];
            via &= condensed.row(a);
            via.reset(b);
            for_each_bit(via, [&](std::size_t c) { redundant.insert(a, c); });
        });
    }

    Relation out(n);
    for (const auto& [a, c] : rel.pairs()) {
        if (comp[a] == comp[c] || !redundant.contains(comp[a], comp[c])) out.insert(a, c);
    }
    return out;
}

}  // namespace discover
