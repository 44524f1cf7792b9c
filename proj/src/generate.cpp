#include "augmis/generate.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace augmis {
namespace {

struct Child {
    Code code;
    Graph graph;
    std::vector<int> colors;
};

bool passes_filters(const Graph& g, Vertex fresh, const std::vector<Pattern>& forbidden) {
    for (const auto& p : forbidden)
        if (p.graph().order() <= g.order() && find_induced_through(g, p, fresh)) return false;
    return true;
}

int balance(const std::vector<int>& colors) {
    int b = 0;
    for (int c : colors) b += c ? 1 : -1;
    return b;
}

// Adds vertex m = parent.order() joined to every vertex in `mask`.
Child make_child(const GrownGraph& parent, std::uint64_t mask, int color, bool colored) {
    const int m = parent.graph.order();
    auto edges = parent.graph.edges();
    for (int v = 0; v < m; ++v)
        if ((mask >> v) & 1U) edges.emplace_back(v, m);
    Child c;
    c.graph = Graph(m + 1, edges);
    if (colored) {
        c.colors = parent.colors;
        c.colors.push_back(color);
    }
    return c;
}

void extend_parent(const GrownGraph& parent, const GrowthOptions& opt, std::vector<Child>& out) {
    const int m = parent.graph.order();
    const bool colored = opt.mode == GrowthMode::ColoredBipartite;
    auto consider = [&](std::uint64_t mask, int color) {
        Child c = make_child(parent, mask, color, colored);
        if (colored && opt.target_balance) {
            int remaining = opt.n_max - (m + 1);
            if (std::abs(balance(c.colors) - *opt.target_balance) > remaining) return;
        }
        if (!passes_filters(c.graph, m, opt.forbidden)) return;
        auto form = canonical_form(c.graph, c.colors);
        c.graph = permute(c.graph, form.labeling);
        if (colored) {
            std::vector<int> relabeled(c.colors.size());
            for (std::size_t v = 0; v < c.colors.size(); ++v) relabeled[form.labeling[v]] = c.colors[v];
            c.colors = std::move(relabeled);
        }
        c.code = std::move(form.code);
        out.push_back(std::move(c));
    };
    // Nonempty subsets of `side`.
    auto subsets_of = [&](std::uint64_t side, int color) {
        for (std::uint64_t s = side; s; s = (s - 1) & side) consider(s, color);
    };
    switch (opt.mode) {
    case GrowthMode::General:
        subsets_of((std::uint64_t{1} << m) - 1, 0);
        break;
    case GrowthMode::Bipartite: {
        auto sides = bipartition(parent.graph);
        std::uint64_t w = 0, b = 0;
        for (Vertex v : sides->white) w |= std::uint64_t{1} << v;
        for (Vertex v : sides->black) b |= std::uint64_t{1} << v;
        subsets_of(w, 0);
        subsets_of(b, 0);
        break;
    }
    case GrowthMode::ColoredBipartite: {
        std::uint64_t w = 0, b = 0;
        for (int v = 0; v < m; ++v) (parent.colors[v] ? b : w) |= std::uint64_t{1} << v;
        subsets_of(b, 0);  // new white vertex joins black vertices
        subsets_of(w, 1);
        break;
    }
    }
}

} // namespace

std::vector<std::vector<GrownGraph>> grow_connected(const GrowthOptions& opt) {
    if (opt.n_max < 0 || opt.n_max > 32) throw std::invalid_argument("n_max out of supported range");
    std::vector<std::vector<GrownGraph>> levels(static_cast<std::size_t>(std::max(opt.n_max, 0) + 1));
    if (opt.n_max == 0) return levels;

    const bool colored = opt.mode == GrowthMode::ColoredBipartite;
    for (int color : colored ? std::vector<int>{0, 1} : std::vector<int>{0}) {
        GrownGraph k1;
        k1.graph = Graph(1);
        if (colored) k1.colors = {color};
        if (colored && opt.target_balance && std::abs((color ? 1 : -1) - *opt.target_balance) > opt.n_max - 1)
            continue;
        if (!passes_filters(k1.graph, 0, opt.forbidden)) continue;
        k1.code = canonical_form(k1.graph, k1.colors).code;
        levels[1].push_back(std::move(k1));
    }
    std::sort(levels[1].begin(), levels[1].end(), [](const auto& a, const auto& b) { return a.code < b.code; });

    unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
    for (int n = 2; n <= opt.n_max; ++n) {
        const auto& parents = levels[n - 1];
        std::vector<std::vector<Child>> buckets(threads);
        auto work = [&](unsigned id) {
            std::set<Code> seen;
            std::vector<Child> scratch;
            for (std::size_t i = id; i < parents.size(); i += threads) {
                scratch.clear();
                extend_parent(parents[i], opt, scratch);
                for (auto& c : scratch)
                    if (seen.insert(c.code).second) buckets[id].push_back(std::move(c));
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (auto& t : pool) t.join();
        }
        std::vector<Child> merged;
        for (auto& b : buckets)
            for (auto& c : b) merged.push_back(std::move(c));
        std::sort(merged.begin(), merged.end(), [](const Child& a, const Child& b) { return a.code < b.code; });
        auto& level = levels[n];
        for (auto& c : merged) {
            if (!level.empty() && level.back().code == c.code) continue;
            level.push_back(GrownGraph{std::move(c.graph), std::move(c.colors), std::move(c.code)});
        }
    }
    return levels;
}

} // namespace augmis
