#pragma once

#include "augmis/finders.hpp"
#include "augmis/graph.hpp"
#include "augmis/patterns.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace augmis {

struct LineGraph {
    Graph graph;
    /// edges[x] is the edge of the source graph behind vertex x, ascending.
    std::vector<Edge> edges;
};

/// Throws std::invalid_argument on an edgeless graph.
LineGraph line_graph(const Graph& g);

inline constexpr int kMaxMatchingOrder = 20;

/// Matching number by exhaustive search (memoised over vertex subsets).
/// Throws std::invalid_argument above 20 vertices.
int max_matching_size(const Graph& g);

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seeded random graph on n <= 200 vertices with edge probability `density`,
/// repaired by deleting the least edge of each forbidden embedding found
/// until it is free of `patterns`.
Graph gen_free_random(int n, double density, const std::vector<Pattern>& patterns, std::uint64_t seed);

struct PlantSpec {
    int k = 4;
    int p = 2;
    /// |Q1| = |Q2|.
    int extras = 0;
    /// Noise vertex pairs attempted around the planted graph.
    int noise = 0;
    std::uint64_t seed = 0;
};

struct PlantedInstance {
    Graph graph;
    VertexSet s;
    /// The planted augmenting graph: W = A0 ∪ Q1, B = {u} ∪ B0 ∪ Q2.
    AugCandidate planted;
};

class InfeasibleSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A black-centred T(k) on middles A0 ⊆ S and leaves B0 ⊆ R, widened by
/// `extras` white/black pairs and surrounded by noise. The result is
/// (S(1,1,3), K(p,p))-free, S is independent with alpha = |S| + 1, and the
/// planted graph is augmenting for S. Requires p >= 2, k >= p + 2 and
/// extras <= 2p; throws InfeasibleSpec otherwise.
PlantedInstance plant_augmenting_tree(const PlantSpec& spec);

} // namespace augmis
