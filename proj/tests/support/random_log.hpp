#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "discover/event_log.hpp"

namespace testsupport {

struct LogShape {
    std::size_t min_alphabet = 2;
    std::size_t max_alphabet = 8;
    std::size_t min_traces = 1;
    std::size_t max_traces = 20;
    std::size_t min_length = 1;
    std::size_t max_length = 15;
};

inline std::string activity_name(std::size_t i) {
    // a..z, then a1.. so any alphabet size works
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26) name += std::to_string(i / 26);
    return name;
}

/// Uniform activity draw. Only activities that actually occur end up in the
/// log's alphabet, so the alphabet can be smaller than the drawn size.
inline std::vector<std::vector<std::string>> random_traces(std::mt19937_64& rng, const LogShape& shape = {}) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    const std::size_t alphabet = pick(shape.min_alphabet, shape.max_alphabet);
    const std::size_t traces = pick(shape.min_traces, shape.max_traces);
    std::vector<std::vector<std::string>> out(traces);
    for (auto& trace : out) {
        const std::size_t len = pick(shape.min_length, shape.max_length);
        for (std::size_t i = 0; i < len; ++i) trace.push_back(activity_name(pick(0, alphabet - 1)));
    }
    return out;
}

inline discover::EventLog random_log(std::mt19937_64& rng, const LogShape& shape = {}) {
    return discover::EventLog::from_labels(random_traces(rng, shape));
}

/// traces x length events drawn uniformly from `activities` labels.
inline discover::EventLog synthetic_log(std::uint64_t seed, std::size_t traces, std::size_t length,
                                        std::size_t activities) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> draw(0, activities - 1);
    std::vector<std::vector<std::string>> out(traces);
    for (auto& trace : out)
        for (std::size_t i = 0; i < length; ++i) trace.push_back(activity_name(draw(rng)));
    return discover::EventLog::from_labels(out);
}

}  // namespace testsupport
