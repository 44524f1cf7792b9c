#include "augmis/verify.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace augmis;
using namespace augmis::testing;

namespace {

// T(3) with one extra vertex 7 joined to `nbrs`.
Graph t3_plus(const std::vector<Vertex>& nbrs) {
    auto e = Pattern::simple_tree(3).graph().edges();
    for (Vertex v : nbrs) e.emplace_back(v, 7);
    return Graph(8, e);
}

SimpleTreeCopy t3_copy() { return {0, {1, 2, 3}, {4, 5, 6}}; }

} // namespace

TEST_CASE("anatomy of a bare tree") {
    Graph g = Pattern::simple_tree(3).graph();
    Anatomy a = compute_anatomy(g, t3_copy());
    CHECK(a.u == 0);
    CHECK(a.a0 == VertexSet{1, 2, 3});
    CHECK(a.b0 == VertexSet{4, 5, 6});
    for (const VertexSet* s : {&a.a1, &a.b1, &a.b1p, &a.b1pp, &a.c, &a.d1, &a.d2}) CHECK(s->empty());
    CHECK(anatomy_failures(g, a).empty());
}

TEST_CASE("anatomy sets by definition") {
    CHECK(compute_anatomy(t3_plus({0}), t3_copy()).c == VertexSet{7});
    Anatomy all_leaves = compute_anatomy(t3_plus({0, 4, 5, 6}), t3_copy());
    CHECK(all_leaves.b1pp == VertexSet{7});
    CHECK(all_leaves.b1 == VertexSet{7});
    CHECK(all_leaves.b1p.empty());
    Anatomy mids = compute_anatomy(t3_plus({1, 2, 3}), t3_copy());
    CHECK(mids.a1 == VertexSet{7});
    CHECK(anatomy_failures(t3_plus({1, 2, 3}), mids).empty());

    // A second level: 8 hangs off the A1 vertex 7.
    auto e = t3_plus({1, 2, 3}).edges();
    e.emplace_back(7, 8);
    Graph g(9, e);
    Anatomy a = compute_anatomy(g, t3_copy());
    CHECK(a.d1 == VertexSet{8});
    CHECK(anatomy_failures(g, a).empty());
}

TEST_CASE("a leaf neighbour away from the centre breaks statement i") {
    Graph g = t3_plus({4});
    CHECK(find_induced(g, Pattern::spider(1, 1, 3)));
    Anatomy a = compute_anatomy(g, t3_copy());
    CHECK(a.b1 == VertexSet{7});
    auto failed = anatomy_failures(g, a);
    REQUIRE_FALSE(failed.empty());
    CHECK(failed.front() == "i");
}

TEST_CASE("malformed trees are rejected") {
    Graph g = Pattern::simple_tree(3).graph();
    CHECK_THROWS_AS(compute_anatomy(g, {0, {1, 2, 3}, {4, 6, 5}}), GraphError);
    CHECK_THROWS_AS(compute_anatomy(g, {0, {1, 2}, {4, 5, 6}}), GraphError);
    CHECK_THROWS_AS(compute_anatomy(g, {0, {1, 2, 2}, {4, 5, 5}}), GraphError);
    auto e = g.edges();
    e.emplace_back(4, 5);
    CHECK_THROWS_AS(compute_anatomy(Graph(7, e), t3_copy()), GraphError);
}

TEST_CASE("statement failures only occur with an induced S(1,1,3)") {
    std::mt19937_64 rng(61);
    int checked = 0, failing = 0;
    for (int run = 0; run < 400; ++run) {
        // Random bipartite graph on sides {0..a-1}, {a..n-1}.
        const int n = 8 + static_cast<int>(rng() % 5), a = n / 2;
        std::vector<Edge> e;
        for (int x = 0; x < a; ++x)
            for (int y = a; y < n; ++y)
                if (rng() % 100 < 30) e.emplace_back(x, y);
        Graph g(n, e);
        if (!is_connected(g)) continue;
        for (const auto& t : maximal_simple_trees(g, 3)) {
            ++checked;
            if (anatomy_failures(g, compute_anatomy(g, t)).empty()) continue;
            ++failing;
            CHECK(find_induced(g, Pattern::spider(1, 1, 3)));
        }
    }
    CHECK(checked > 50);
    CHECK(failing > 0);
}

TEST_CASE("path-or-cycle sweep") {
    PathOrCycleReport r = verify_path_or_cycle(10);
    CHECK(r.violations.empty());
    CHECK(r.with_p8[8] == 1);
    CHECK(r.paths[8] == 1);
    CHECK(r.with_p8[9] == 1);
    CHECK(r.paths[9] == 1);
    CHECK(r.cycles[9] == 0);
    CHECK(r.paths[10] == 1);
    CHECK(r.cycles[10] == 1);
    // Frozen census of connected bipartite S(1,1,3)-free graphs.
    const std::map<int, long> examined{{1, 1}, {2, 1}, {3, 1}, {4, 3}, {5, 5},
                                       {6, 16}, {7, 30}, {8, 75}, {9, 144}, {10, 330}};
    CHECK(r.examined == examined);
    CHECK_THROWS_AS(verify_path_or_cycle(13), std::invalid_argument);
}

TEST_CASE("anatomy sweep") {
    AnatomyReport r = verify_anatomy_statements(10, 3);
    CHECK(r.violations.empty());
    CHECK(r.trees[7] == 1);
    CHECK(r.trees.count(6) == 0);
    CHECK(r.trees[10] > 0);
    CHECK_THROWS_AS(verify_anatomy_statements(10, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_anatomy_statements(14, 3), std::invalid_argument);
}

TEST_CASE("extension sweep") {
    ExtensionReport r = verify_extension_theorem(2, 12);
    CHECK(r.violations.empty());
    CHECK(r.with_tree[9] == 1);
    CHECK(r.irreducible[1] == 1);
    CHECK_THROWS_AS(verify_extension_theorem(3, 9), std::invalid_argument);
}
