#pragma once

#include "augmis/embed.hpp"
#include "augmis/finders.hpp"
#include "augmis/graph.hpp"
#include "augmis/irreducible.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace augmis {

struct SolveConfig {
    int p = 3;
    int catalog_n_max = 9;
    std::optional<int> path_max_len;
    bool validate_class = false;
    /// Used as is when set; otherwise loaded or built for (p, catalog_n_max)
    /// through load_or_build_catalog.
    std::shared_ptr<const Catalog> catalog;
};

struct FinderHits {
    int path = 0;
    int tree = 0;
    int catalog = 0;
};

struct SolveResult {
    VertexSet independent_set;
    int alpha = 0;
    int iterations = 0;
    FinderHits hits;
    /// Set when validate_class found S(1,1,3) or K(p,p): the pattern name and
    /// the embedding (pattern vertex -> graph vertex).
    std::optional<std::string> violation_pattern;
    std::optional<Embedding> class_violation_witness;
    /// Adjacent leaf pairs reported by the tree-extension search.
    std::vector<Edge> tree_violations;
};

/// Maximal independent set, greedy by ascending id.
VertexSet greedy_initial(const Graph& g);

/// (S \ W) ∪ B. Throws std::logic_error if cand is not augmenting for S.
VertexSet augment(const Graph& g, const VertexSet& s, const AugCandidate& cand);

/// Augments a greedy start with the path, tree-extension and catalog finders
/// (in that order) until all three miss.
SolveResult solve_mis(const Graph& g, const SolveConfig& cfg = {});

struct MisResult {
    int alpha = 0;
    /// Lexicographically least maximum independent set.
    VertexSet witness;
};

inline constexpr int kMaxBruteForceOrder = 30;

/// Exact branch and bound; throws std::invalid_argument above 30 vertices.
MisResult brute_force_mis(const Graph& g);

} // namespace augmis
