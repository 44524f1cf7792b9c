#pragma once

#include "augmis/graph.hpp"
#include "augmis/patterns.hpp"

#include <map>
#include <string>
#include <vector>

namespace augmis {

/// The sets around an induced T_k centred at u in a bipartite graph.
struct Anatomy {
    Vertex u = -1;
    VertexSet a0, b0;
    VertexSet b1;    ///< N(B0) \ A0
    VertexSet b1p;   ///< vertices of B1 with exactly one neighbour in B0
    VertexSet b1pp;  ///< vertices of B1 adjacent to all of B0
    VertexSet a1;    ///< N(A0) \ ({u} ∪ B0)
    VertexSet c;     ///< N(u) \ (A0 ∪ B1)
    VertexSet d1;    ///< N(A1) \ (C ∪ A0 ∪ B1)
    VertexSet d2;    ///< N(B1) \ ({u} ∪ B0 ∪ A1)
};

/// Throws GraphError unless t is an induced simple tree of g.
Anatomy compute_anatomy(const Graph& g, const SimpleTreeCopy& t);

/// Labels ("i" .. "viii", "coverage") of the structure statements that fail
/// for this anatomy. Coverage asks that u, A0, A1, B0, B1, C, D1, D2 cover
/// V(g); it is only meaningful for connected g.
std::vector<std::string> anatomy_failures(const Graph& g, const Anatomy& a);

struct Violation {
    Graph graph;
    std::string detail;
};

struct PathOrCycleReport {
    int n_max = 0;
    /// Per vertex count: graphs examined, graphs with an induced P8, and how
    /// many of the latter are paths or cycles.
    std::map<int, long> examined, with_p8, paths, cycles;
    std::vector<Violation> violations;
};

/// Every connected bipartite S(1,1,3)-free graph on at most n_max <= 12
/// vertices that contains an induced P8 must be a chordless path or cycle.
PathOrCycleReport verify_path_or_cycle(int n_max, unsigned threads = 1);

struct AnatomyReport {
    int n_max = 0, k_min = 0;
    /// Per vertex count: graphs examined and maximal T_k copies checked.
    std::map<int, long> examined, trees;
    std::vector<Violation> violations;
};

/// All structure statements for every inclusion-maximal induced T_k
/// (k >= k_min >= 3) in every connected bipartite S(1,1,3)-free graph on at
/// most n_max <= 13 vertices.
AnatomyReport verify_anatomy_statements(int n_max, int k_min, unsigned threads = 1);

struct ExtensionReport {
    int p = 0, n_max = 0;
    /// Per vertex count: irreducible (S(1,1,3), K(p,p))-free graphs, and those
    /// containing an induced T(p+2).
    std::map<int, long> irreducible, with_tree;
    std::vector<Violation> violations;
};

/// Each irreducible (S(1,1,3), K(p,p))-free graph with an induced T(p+2) on
/// at most n_max <= 13 vertices has a black-centred induced T(p+2) and turns
/// into a simple tree T_k, k >= p + 2, after deleting at most 4p vertices.
/// Only p = 2 is supported.
ExtensionReport verify_extension_theorem(int p, int n_max, unsigned threads = 1);

} // namespace augmis
