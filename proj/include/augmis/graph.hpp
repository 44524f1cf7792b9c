#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace augmis {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids. Every operation that returns a
/// VertexSet returns it in this normal form.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on the dense vertex ids 0..n-1.
///
/// Adjacency is kept twice: as a bit matrix for constant-time adjacency tests
/// (pattern search is dominated by them) and as sorted neighbour lists for
/// iteration. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Duplicate edges are merged; self-loops and out-of-range ids throw.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    std::size_t size() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    /// Row of the adjacency bit matrix, `words()` 64-bit words long.
    std::span<const std::uint64_t> row(Vertex v) const {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t words() const { return words_; }

    /// All edges (u, v) with u < v, ascending.
    std::vector<Edge> edges() const;

    bool valid(Vertex v) const { return v >= 0 && v < n_; }
    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Sorts and deduplicates in place; returns the normalised set.
VertexSet normalize(VertexSet s);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Graph& g);

/// N(U): union of the neighbourhoods of U. May intersect U.
VertexSet neighbourhood(const Graph& g, const VertexSet& u);
/// N_X(U) = N(U) ∩ X.
VertexSet restricted_neighbourhood(const Graph& g, const VertexSet& u, const VertexSet& x);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the original id of new vertex i (ascending).
    std::vector<Vertex> to_parent;
    /// Original id -> new id, or -1 when the vertex was dropped.
    std::vector<Vertex> from_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

bool is_independent(const Graph& g, const VertexSet& x);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
    VertexSet white;
    VertexSet black;
};

/// Proper 2-colouring, or nullopt when G has an odd cycle. In every component
/// the side holding the smallest id is white.
std::optional<Bipartition> bipartition(const Graph& g);

/// Relabels vertices: vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace augmis
