#include "augmis/patterns.hpp"
#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace augmis;
using namespace augmis::testing;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

Graph line_graph_naive(const Graph& g) {
    auto e = g.edges();
    std::vector<Edge> out;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                e[i].second == e[j].second)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(e.size()), out);
}

} // namespace

TEST_CASE("pattern constructors") {
    Graph p8 = Pattern::path(8).graph();
    CHECK(p8.order() == 8);
    CHECK(p8.size() == 7);

    Graph t3 = Pattern::simple_tree(3).graph();
    CHECK(t3.order() == 7);
    CHECK(t3.size() == 6);
    CHECK(t3.degree(0) == 3);

    Graph s113 = Pattern::spider(1, 1, 3).graph();
    CHECK(s113.order() == 6);
    CHECK(degree_sequence(s113) == std::vector<int>{3, 2, 2, 1, 1, 1});

    CHECK(isomorphic_brute(Pattern::spider(1, 1, 1).graph(), Pattern::biclique(1, 3).graph()));
    CHECK_THROWS_AS(Pattern::biclique(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::path(0), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::spider(1, 0, 2), std::invalid_argument);
}

TEST_CASE("pattern names round-trip") {
    for (const char* text : {"S(1,1,3)", "P(8)", "K(3,3)", "T(4)", "C(6)"})
        CHECK(Pattern::parse(text).name() == text);
    auto list = Pattern::parse_list("P(8),T(4),K(3,3)");
    REQUIRE(list.size() == 3);
    CHECK(list[2].name() == "K(3,3)");
    CHECK_THROWS_AS(Pattern::parse("Q(3)"), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::parse("K(3)"), std::invalid_argument);
}

TEST_CASE("find_induced examples") {
    CHECK(find_induced(cycle_graph(6), Pattern::path(4)));
    CHECK_FALSE(find_induced(cycle_graph(5), Pattern::biclique(2, 2)));
    auto claw = find_induced(complete_bipartite(3, 3), Pattern::spider(1, 1, 1));
    REQUIRE(claw);
    CHECK((*claw)[0] == 0);  // lexicographically least: centre at vertex 0
    CHECK(*claw == Embedding{0, 3, 4, 5});
}

TEST_CASE("is_free examples") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(6, 0.5, rng);
        if (g.size() == 0) continue;
        CHECK(is_free(line_graph_naive(g), {Pattern::spider(1, 1, 1)}).free);
    }
    auto k33 = is_free(complete_bipartite(3, 3), {Pattern::biclique(3, 3)});
    CHECK_FALSE(k33.free);
    CHECK(k33.pattern_index == 0u);
    CHECK(k33.witness == Embedding{0, 1, 2, 3, 4, 5});
    CHECK(is_free(path_graph(7), {Pattern::path(8)}).free);
}

TEST_CASE("embeddings are induced copies") {
    std::mt19937_64 rng(11);
    std::vector<Pattern> pats{Pattern::path(4), Pattern::spider(1, 1, 1), Pattern::biclique(2, 2),
                              Pattern::spider(1, 1, 2), Pattern::cycle(5), Pattern::simple_tree(2)};
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_graph(5 + static_cast<int>(rng() % 5), 0.4, rng);
        for (const auto& p : pats) {
            if (auto e = find_induced(g, p)) {
                std::vector<int> verts(e->begin(), e->end());
                CHECK(std::set<int>(verts.begin(), verts.end()).size() == verts.size());
                // induced_on keeps the pattern's vertex order, so the check is exact.
                CHECK(induced_on(g, verts) == p.graph());
            }
        }
    }
}

TEST_CASE("find_induced agrees with exhaustive subset search") {
    std::mt19937_64 rng(5);
    std::vector<Pattern> pats{Pattern::path(4), Pattern::spider(1, 1, 1), Pattern::biclique(2, 2),
                              Pattern::spider(1, 1, 3), Pattern::cycle(4), Pattern::simple_tree(2),
                              Pattern::path(5)};
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.25 + 0.1 * static_cast<double>(rng() % 4), rng);
        for (const auto& p : pats)
            CHECK(find_induced(g, p).has_value() == contains_induced_brute(g, p.graph()));
    }
}

TEST_CASE("embedding through a fixed vertex") {
    Graph g = disjoint_union(path_graph(4), Graph(2, {{0, 1}}));
    CHECK(find_induced_through(g, Pattern::path(3), 1));
    CHECK_FALSE(find_induced_through(g, Pattern::path(3), 4));
    auto e = find_induced_through(g, Pattern::path(4), 3);
    REQUIRE(e);
    CHECK(std::find(e->begin(), e->end(), 3) != e->end());
}

TEST_CASE("claw-freeness implies the larger exclusions") {
    std::mt19937_64 rng(17);
    auto claw = Pattern::spider(1, 1, 1);
    int claw_free = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(8, 0.5, rng);
        if (!is_free(g, {claw}).free) continue;
        ++claw_free;
        CHECK(is_free(g, {Pattern::spider(1, 1, 3), Pattern::biclique(3, 3)}).free);
    }
    CHECK(claw_free > 0);
}

TEST_CASE("maximal simple tree") {
    Graph t5 = Pattern::simple_tree(5).graph();
    auto t = find_max_simple_tree(t5, 0);
    REQUIRE(t);
    CHECK(t->k() == 5);
    CHECK(t->vertices() == all_vertices(t5));

    // In K(3,3) a single induced P3 hangs off every vertex, but no second
    // pair fits: the middle would be adjacent to the first leaf.
    auto k33 = find_max_simple_tree(complete_bipartite(3, 3), 0);
    REQUIRE(k33);
    CHECK(k33->k() == 1);

    CHECK_FALSE(find_max_simple_tree(Pattern::biclique(1, 4).graph(), 0));
}

TEST_CASE("greedy simple tree is inclusion-maximal and induced") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(10, 0.3, rng);
        for (Vertex u = 0; u < g.order(); ++u) {
            auto t = find_max_simple_tree(g, u);
            if (!t) continue;
            std::vector<int> verts{t->center};
            verts.insert(verts.end(), t->middles.begin(), t->middles.end());
            verts.insert(verts.end(), t->leaves.begin(), t->leaves.end());
            CHECK(induced_on(g, verts) == Pattern::simple_tree(t->k()).graph());
            for (Vertex a : g.neighbors(u))
                for (Vertex b : g.neighbors(a)) CHECK_FALSE(extends_simple_tree(g, *t, a, b));
        }
    }
}

TEST_CASE("maximal_simple_trees enumerates every maximal copy") {
    // T(3) plus a second leaf on middle 1 gives two maximal T_3 copies.
    Graph g(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {1, 7}});
    auto all = maximal_simple_trees(g, 3);
    CHECK(all.size() == 2);
    for (const auto& t : all) CHECK(t.center == 0);
}
