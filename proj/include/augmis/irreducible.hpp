#pragma once

#include "augmis/canon.hpp"
#include "augmis/graph.hpp"
#include "augmis/patterns.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace augmis {

/// Bipartite graph with an explicit white/black colouring. The colour
/// classes partition the vertex set and are both independent.
class ColoredBipartite {
public:
    ColoredBipartite() = default;
    /// Throws GraphError unless white/black partition V into independent sets.
    ColoredBipartite(Graph g, VertexSet white, VertexSet black);
    /// colors[v] == 1 means black.
    static ColoredBipartite from_colors(Graph g, const std::vector<int>& colors);

    const Graph& graph() const { return graph_; }
    const VertexSet& white() const { return white_; }
    const VertexSet& black() const { return black_; }
    bool is_black(Vertex v) const { return colors_[v] == 1; }
    const std::vector<int>& colors() const { return colors_; }
    int order() const { return graph_.order(); }

private:
    Graph graph_;
    VertexSet white_, black_;
    std::vector<int> colors_;
};

/// Maximum matching as (white, black) pairs, ascending by white vertex.
std::vector<Edge> max_bipartite_matching(const ColoredBipartite& h);

/// Every nonempty A ⊆ W has |N(A) ∩ B| >= |A| + 1. Checked as: for each black
/// vertex b, W is still saturated by a matching after deleting b.
bool hall_surplus_check(const ColoredBipartite& h);

/// |W| = |B| - 1, the Hall surplus condition, and connectivity. A lone black
/// vertex qualifies.
bool is_irreducible(const ColoredBipartite& h);

inline constexpr int kMaxEnumerationOrder = 14;

/// Colour-preserving canonical code. Throws std::invalid_argument above
/// kMaxEnumerationOrder vertices.
Code canonical_code(const ColoredBipartite& h);
ColoredBipartite decode_colored(const Code& code);

struct CatalogEntry {
    Code code;
    ColoredBipartite graph;  ///< canonical labelling
};

struct Catalog {
    int max_vertices = 0;
    std::vector<Pattern> filters;
    /// Ascending by vertex count, then by code.
    std::vector<CatalogEntry> entries;

    /// Number of entries per vertex count.
    std::map<int, int> census() const;
};

class BoundExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All irreducible, filter-free coloured graphs on at most n_max vertices, one
/// per colour-preserving isomorphism class.
Catalog enumerate_irreducible(int n_max, const std::vector<Pattern>& filters, unsigned threads = 1);

/// Default filters for class parameter p: P(8), T(p+2), K(p,p).
std::vector<Pattern> catalog_filters(int p);

struct RamseyResult {
    int t = 0, p = 0;
    /// Least N such that every bipartite graph with a matching of size N
    /// contains K(t,t) or an induced matching on p edges.
    int bound = 0;
    /// A graph with a perfect matching of size bound-1 avoiding both, when
    /// bound > 1.
    std::optional<ColoredBipartite> witness;
    /// Graphs examined at the final size (all of them contained one).
    std::size_t certified = 0;
};

/// Exhaustive search over bipartite graphs with sides {w_i}, {b_i} and the
/// perfect matching w_i b_i, for growing N. Throws BoundExceeded when a level
/// would need more than 2^max_free_pairs graphs.
RamseyResult bipartite_ramsey_bound(int t, int p, int max_free_pairs = 24);

/// Does the bipartite graph with the given sides contain K(t,t) across the
/// sides, or an induced matching with p edges?
bool has_biclique(const ColoredBipartite& h, int t);
bool has_induced_matching(const ColoredBipartite& h, int p);

struct MinClassesLevel {
    int n = 0;
    int irreducible = 0;
    int census = 0;       ///< (P_t, K_{t-1,t}, T_t)-free ones
    int with_path = 0;    ///< contain P_t
    int with_biclique = 0;
    int with_tree = 0;
    int misses = 0;       ///< classification disagreements (must be 0)
};

struct MinClassesReport {
    int t = 0;
    int n_max = 0;
    std::vector<MinClassesLevel> levels;
    int misses() const;
};

/// Splits every irreducible graph up to n_max into the (P_t, K_{t-1,t}, T_t)-
/// free census and the rest, checks each of the rest has a verified induced
/// witness, and cross-checks the census against a filtered enumeration.
MinClassesReport verify_min_classes(int n_max, int t, unsigned threads = 1);

} // namespace augmis
