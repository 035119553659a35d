#pragma once

#include <cstddef>
#include <limits>

#include "structree/graph.hpp"

namespace structree {

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Maximum number of edge-disjoint paths from `sources` to `sinks` (sets must
/// be disjoint). Stops counting once `limit` is reached.
std::size_t edge_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                std::size_t limit = kNoLimit);

/// Maximum number of vertex-disjoint paths from `sources` to `sinks` that stay
/// inside `allowed`. A vertex in both sources and sinks is a path of length 0.
std::size_t vertex_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                  const VertexSet& allowed, std::size_t limit = kNoLimit);

}  // namespace structree
