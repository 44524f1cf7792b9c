#pragma once

#include "augmis/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace augmis {

/// Injective map from pattern vertices to target vertices; embedding[x] is the
/// image of pattern vertex x.
using Embedding = std::vector<Vertex>;

struct EmbedOptions {
    /// Extra per-vertex admissibility test (pattern vertex, target vertex).
    std::function<bool(Vertex, Vertex)> admissible;
    /// When set, only embeddings whose image contains this target vertex.
    std::optional<Vertex> must_contain;
};

/// Backtracking induced-subgraph search. Pattern vertices are placed in a
/// static order (highest degree first, then most already-placed neighbours);
/// candidates are tried in ascending id. The callback returns false to stop.
/// Returns true if the search was stopped by the callback.
bool for_each_induced_embedding(const Graph& target, const Graph& pattern,
                                const EmbedOptions& options,
                                const std::function<bool(const Embedding&)>& visit);

std::optional<Embedding> find_induced_embedding(const Graph& target, const Graph& pattern,
                                                const EmbedOptions& options = {});

} // namespace augmis
