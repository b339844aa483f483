#ifndef GKM_GRAPH_IO_HPP
#define GKM_GRAPH_IO_HPP

#include <string>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

struct LoadOptions {
    /// Parallel edges with proportional weights are rejected at load by
    /// default; `validate` wants to see them, so it loads with this off.
    bool reject_proportional_parallel = true;
};

struct LoadResult {
    GkmGraph graph;
    /// Unknown fields are tolerated for forward compatibility and reported
    /// here, one note per field.
    std::vector<std::string> warnings;
};

/// Graph interchange format (JSON, UTF-8):
///   {
///     "rank": n,
///     "vertices": ["p0", ...],
///     "edges": [{"from": "p0", "to": "p1", "weight": [int * n],
///                "length": "p/q",        // optional, positive rational
///                "chern": [int * m]}]    // optional, uniform length
///   }
/// The weight is the axial value for the from -> to orientation. Throws
/// MalformedGraph on structural problems.
LoadResult parse_graph(const std::string& json_text, const LoadOptions& options = {});
LoadResult load_graph(const std::string& path, const LoadOptions& options = {});

/// Canonical serialization: fixed key order, vertices in stored order,
/// exact rationals as "p/q" strings. Identical graphs produce identical
/// bytes.
std::string graph_to_json(const GkmGraph& g);
void save_graph(const GkmGraph& g, const std::string& path);

} // namespace gkm

#endif // GKM_GRAPH_IO_HPP
