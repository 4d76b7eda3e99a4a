#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "discover/dcr_graph.hpp"

namespace discover {

// Model JSON:
//   {
//     "events": [label, ...],                     // id order
//     "conditionsFor": [[source, target], ...],   // sorted by (source, target) label
//     "responsesTo":   [[source, target], ...],
//     "excludesTo":    [[source, target], ...],
//     "includesTo":    [[source, target], ...],
//     "initialMarking": {"executed": [...], "pending": [...], "included": [...]}  // id order
//   }
// The same writer is used everywhere, so equal graphs serialise to equal bytes.

nlohmann::ordered_json to_json(const DcrGraph& graph);

/// ParseError on schema violations, ValidationError on an include/exclude overlap.
DcrGraph from_json(const nlohmann::json& doc);

/// Pretty-printed JSON followed by a newline.
std::string to_json_string(const DcrGraph& graph);
DcrGraph from_json_string(const std::string& text);

DcrGraph read_model(const std::filesystem::path& path);
void write_model(const DcrGraph& graph, const std::filesystem::path& path);

/// Graphviz rendering. Conditions orange, responses blue, includes green,
/// excludes red dashed; excluded events are drawn dashed and pending ones
/// with a double border.
std::string to_dot(const DcrGraph& graph);

}  // namespace discover
