#pragma once

#include <cstddef>
#include <vector>

#include "discover/relation.hpp"

namespace discover {

/// Strongly connected component index per node; components are numbered in
/// reverse topological order of the condensation (sinks first).
std::vector<std::size_t> strongly_connected_components(const Relation& rel, std::size_t* count = nullptr);

/// Minimal relation with the same transitive closure. Exact on acyclic input.
/// Edges inside a strongly connected component (self loops included) are
/// kept as-is; an edge between components is dropped only when the
/// condensation offers another path between the two components.
Relation transitive_reduction(const Relation& rel);

}  // namespace discover
