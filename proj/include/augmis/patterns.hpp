#pragma once

#include "augmis/embed.hpp"
#include "augmis/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace augmis {

enum class PatternKind { Spider, Path, Biclique, SimpleTree, Cycle, Explicit };

/// A named forbidden-subgraph template.
///
/// Vertex numbering of the built graphs:
///   S(i,j,k)  centre 0, then the three legs outward: 1..i, i+1..i+j, i+j+1..i+j+k
///   P(n)      0-1-...-(n-1)
///   K(m,n)    first side 0..m-1, second side m..m+n-1
///   T(k)      centre 0, middle vertices 1..k, leaf k+i hangs off middle i
///   C(n)      cycle 0-1-...-(n-1)-0
class Pattern {
public:
    static Pattern spider(int i, int j, int k);
    static Pattern path(int n);
    static Pattern biclique(int m, int n);
    static Pattern simple_tree(int k);
    static Pattern cycle(int n);
    static Pattern explicit_graph(Graph g, std::string name = "G");

    /// Accepts the names produced by name(): "S(1,1,3)", "P(8)", "K(3,3)",
    /// "T(4)", "C(6)". Throws std::invalid_argument otherwise.
    static Pattern parse(std::string_view text);
    /// Splits "P(8),T(4),K(3,3)" (commas inside parentheses kept).
    static std::vector<Pattern> parse_list(std::string_view text);

    PatternKind kind() const { return kind_; }
    const std::vector<int>& params() const { return params_; }
    const Graph& graph() const { return graph_; }
    std::string name() const;

private:
    Pattern(PatternKind kind, std::vector<int> params, Graph graph, std::string label = {})
        : kind_(kind), params_(std::move(params)), graph_(std::move(graph)), label_(std::move(label)) {}

    PatternKind kind_;
    std::vector<int> params_;
    Graph graph_;
    std::string label_;
};

Graph build_pattern(PatternKind kind, const std::vector<int>& params);

std::optional<Embedding> find_induced(const Graph& g, const Pattern& p);
/// Induced copy of p whose image contains v.
std::optional<Embedding> find_induced_through(const Graph& g, const Pattern& p, Vertex v);

struct FreeCheck {
    bool free = true;
    /// Index into the pattern list of the first pattern found, and its witness.
    std::optional<std::size_t> pattern_index;
    Embedding witness;
};

FreeCheck is_free(const Graph& g, const std::vector<Pattern>& patterns);

/// An induced simple tree T_k: centre, middle vertices, and leaves with
/// leaves[i] adjacent to middles[i].
struct SimpleTreeCopy {
    Vertex center = -1;
    std::vector<Vertex> middles;
    std::vector<Vertex> leaves;
    int k() const { return static_cast<int>(middles.size()); }
    VertexSet vertices() const;
};

/// Can (a, b) be added to the tree as a new middle/leaf pair while keeping it
/// an induced simple tree?
bool extends_simple_tree(const Graph& g, const SimpleTreeCopy& t, Vertex a, Vertex b);

/// Greedy inclusion-maximal induced T_k centred at u: pairs (a, b) with
/// a in N(u), b in N(a) are scanned in ascending order and added whenever the
/// tree stays induced. nullopt when no induced T_1 hangs off u.
std::optional<SimpleTreeCopy> find_max_simple_tree(const Graph& g, Vertex u);

/// Every induced T_k with k >= k_min centred anywhere in g that cannot be
/// extended by another pair at the same centre.
std::vector<SimpleTreeCopy> maximal_simple_trees(const Graph& g, int k_min);

} // namespace augmis
