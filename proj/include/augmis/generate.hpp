#pragma once

#include "augmis/canon.hpp"
#include "augmis/graph.hpp"
#include "augmis/patterns.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace augmis {

enum class GrowthMode {
    General,          ///< all connected graphs
    Bipartite,        ///< connected bipartite graphs, uncoloured
    ColoredBipartite  ///< connected bipartite graphs with a fixed white(0)/black(1) colouring
};

struct GrowthOptions {
    int n_max = 0;
    GrowthMode mode = GrowthMode::General;
    /// Forbidden induced subgraphs, applied at every level (the classes are
    /// hereditary, so pruning a graph prunes all of its extensions).
    std::vector<Pattern> forbidden;
    /// Coloured mode only: drop graphs that can no longer reach
    /// |black| - |white| == target_balance within n_max vertices.
    std::optional<int> target_balance;
    /// Worker threads for extending a level (0 = hardware concurrency).
    unsigned threads = 1;
};

struct GrownGraph {
    Graph graph;             ///< in canonical labelling
    std::vector<int> colors; ///< empty unless coloured mode
    Code code;
};

/// One representative per isomorphism class of connected graphs on
/// 1..n_max vertices; result[n] lists the graphs on n vertices sorted by
/// canonical code (result[0] is empty).
///
/// Every connected graph has a vertex whose deletion leaves it connected, so
/// adding one vertex (joined to at least one existing vertex) to every graph
/// of the previous level reaches every class.
std::vector<std::vector<GrownGraph>> grow_connected(const GrowthOptions& options);

} // namespace augmis
