#pragma once

#include <cstddef>
#include <vector>

namespace akc {

struct SccDecomposition {
    std::vector<std::size_t> component;  ///< component id per vertex
    std::size_t count = 0;
};

/// Tarjan's algorithm, iterative. Component ids come out in reverse
/// topological order of the condensation (sinks first).
SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors);

} // namespace akc
