#include "augmis/generate.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace augmis;

namespace {
std::vector<std::size_t> counts(const std::vector<std::vector<GrownGraph>>& levels) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n < levels.size(); ++n) out.push_back(levels[n].size());
    return out;
}
} // namespace

TEST_CASE("connected graph counts match the known sequence") {
    GrowthOptions opt;
    opt.n_max = 7;
    CHECK(counts(grow_connected(opt)) == std::vector<std::size_t>{1, 1, 2, 6, 21, 112, 853});
}

TEST_CASE("connected bipartite counts") {
    GrowthOptions opt;
    opt.n_max = 9;
    opt.mode = GrowthMode::Bipartite;
    CHECK(counts(grow_connected(opt)) == std::vector<std::size_t>{1, 1, 1, 3, 5, 17, 44, 182, 730});
}

TEST_CASE("coloured bipartite graphs: each uncoloured class appears once per inequivalent colouring") {
    GrowthOptions plain, colored;
    plain.n_max = colored.n_max = 7;
    plain.mode = GrowthMode::Bipartite;
    colored.mode = GrowthMode::ColoredBipartite;
    auto a = grow_connected(plain);
    auto b = grow_connected(colored);
    for (int n = 1; n <= 7; ++n) {
        std::size_t expected = 0;
        for (const auto& g : a[n]) {
            auto sides = bipartition(g.graph);
            std::vector<int> c1(n), c2(n);
            for (Vertex v : sides->black) c1[v] = 1;
            for (int v = 0; v < n; ++v) c2[v] = 1 - c1[v];
            expected += canonical_form(g.graph, c1).code == canonical_form(g.graph, c2).code ? 1 : 2;
        }
        CHECK(b[n].size() == expected);
    }
}

TEST_CASE("threaded growth is identical to sequential") {
    GrowthOptions opt;
    opt.n_max = 7;
    opt.forbidden = {Pattern::spider(1, 1, 1)};
    auto seq = grow_connected(opt);
    opt.threads = 4;
    auto par = grow_connected(opt);
    for (int n = 1; n <= 7; ++n) {
        REQUIRE(seq[n].size() == par[n].size());
        for (std::size_t i = 0; i < seq[n].size(); ++i) CHECK(seq[n][i].code == par[n][i].code);
    }
}

TEST_CASE("forbidden patterns prune hereditarily") {
    GrowthOptions opt;
    opt.n_max = 7;
    opt.forbidden = {Pattern::path(3)};
    auto levels = grow_connected(opt);
    // Connected P3-free graphs are the complete graphs.
    for (int n = 1; n <= 7; ++n) {
        REQUIRE(levels[n].size() == 1);
        CHECK(levels[n][0].graph.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
}
