#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "discover/event_log.hpp"
#include "discover/miner.hpp"

namespace discover::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kIoError = 2;
inline constexpr int kUsage = 64;

/// Runs one command line (args excludes the program name) and returns the
/// process exit code. Human output goes to out, errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchStats {
    std::size_t runs = 0;
    double mean_ms = 0.0;
    double min_ms = 0.0;
    double max_ms = 0.0;
    std::size_t activities = 0;
    std::size_t traces = 0;
    double mean_trace_length = 0.0;
};

/// Mines log `runs` times after one untimed warm-up run.
BenchStats benchmark(const EventLog& log, std::size_t runs, const MinerConfig& config = {});

}  // namespace discover::cli
