#include "augmis/verify.hpp"

#include "augmis/embed.hpp"
#include "augmis/generate.hpp"
#include "augmis/irreducible.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace augmis {

Anatomy compute_anatomy(const Graph& g, const SimpleTreeCopy& t) {
    const int k = t.k();
    if (k < 1 || static_cast<int>(t.leaves.size()) != k) throw GraphError("anatomy: malformed simple tree");
    g.check_vertex(t.center);
    for (int i = 0; i < k; ++i) {
        g.check_vertex(t.middles[i]);
        g.check_vertex(t.leaves[i]);
    }
    const VertexSet verts = t.vertices();
    if (static_cast<int>(verts.size()) != 2 * k + 1) throw GraphError("anatomy: tree vertices not distinct");
    // Exactly the tree edges among the tree vertices.
    auto tree_edge = [&](Vertex x, Vertex y) {
        for (int i = 0; i < k; ++i) {
            const Vertex a = t.middles[i], b = t.leaves[i];
            if ((x == t.center && y == a) || (y == t.center && x == a)) return true;
            if ((x == a && y == b) || (x == b && y == a)) return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]) != tree_edge(verts[i], verts[j]))
                throw GraphError("anatomy: not an induced simple tree");

    Anatomy a;
    a.u = t.center;
    a.a0 = normalize(t.middles);
    a.b0 = normalize(t.leaves);
    const VertexSet u{a.u};
    a.b1 = set_difference(neighbourhood(g, a.b0), a.a0);
    for (Vertex v : a.b1) {
        const auto hits = restricted_neighbourhood(g, {v}, a.b0).size();
        if (hits == 1) a.b1p.push_back(v);
        if (hits == a.b0.size()) a.b1pp.push_back(v);
    }
    a.a1 = set_difference(neighbourhood(g, a.a0), set_union(u, a.b0));
    a.c = set_difference(neighbourhood(g, u), set_union(a.a0, a.b1));
    a.d1 = set_difference(neighbourhood(g, a.a1), set_union(a.c, set_union(a.a0, a.b1)));
    a.d2 = set_difference(neighbourhood(g, a.b1), set_union(u, set_union(a.b0, a.a1)));
    return a;
}

std::vector<std::string> anatomy_failures(const Graph& g, const Anatomy& a) {
    const VertexSet u{a.u};
    std::vector<std::string> out;
    auto check = [&](bool ok, const char* label) {
        if (!ok) out.emplace_back(label);
    };
    check(is_subset(a.b1, neighbourhood(g, u)), "i");
    bool complete = true;
    for (Vertex x : a.a1)
        for (Vertex y : a.a0) complete = complete && g.adjacent(x, y);
    check(complete, "ii");
    check(is_subset(neighbourhood(g, a.c), set_union(u, a.a1)), "iii");
    check(is_subset(neighbourhood(g, a.d1), a.a1), "iv");
    check(set_union(a.b1p, a.b1pp) == a.b1, "v");
    check(a.b1p.empty() || a.b1pp.empty(), "vi");
    check(is_subset(neighbourhood(g, a.b1p), set_union(u, set_union(a.b0, a.a1))), "vii");
    check(is_subset(neighbourhood(g, a.d2), a.b1), "viii");
    VertexSet cover = u;
    for (const VertexSet* s : {&a.a0, &a.a1, &a.b0, &a.b1, &a.c, &a.d1, &a.d2}) cover = set_union(cover, *s);
    check(static_cast<int>(cover.size()) == g.order(), "coverage");
    return out;
}

namespace {

std::vector<std::vector<GrownGraph>> bipartite_s113_free(int n_max, unsigned threads) {
    GrowthOptions opt;
    opt.n_max = n_max;
    opt.mode = GrowthMode::Bipartite;
    opt.forbidden = {Pattern::spider(1, 1, 3)};
    opt.threads = threads;
    return grow_connected(opt);
}

bool is_chordless_path(const Graph& g) {
    if (!is_connected(g) || g.size() + 1 != static_cast<std::size_t>(g.order())) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_chordless_cycle(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

std::string tree_text(const SimpleTreeCopy& t) {
    std::string s = "u=" + std::to_string(t.center) + " pairs=";
    for (int i = 0; i < t.k(); ++i)
        s += (i ? "," : "") + std::to_string(t.middles[i]) + "-" + std::to_string(t.leaves[i]);
    return s;
}

} // namespace

PathOrCycleReport verify_path_or_cycle(int n_max, unsigned threads) {
    if (n_max < 1 || n_max > 12) throw std::invalid_argument("verify_path_or_cycle: n_max must be in [1, 12]");
    PathOrCycleReport rep;
    rep.n_max = n_max;
    const Pattern p8 = Pattern::path(8);
    const auto levels = bipartite_s113_free(n_max, threads);
    for (int n = 1; n <= n_max; ++n) {
        rep.examined[n] = static_cast<long>(levels[n].size());
        for (const auto& gg : levels[n]) {
            if (!find_induced(gg.graph, p8)) continue;
            ++rep.with_p8[n];
            if (is_chordless_path(gg.graph))
                ++rep.paths[n];
            else if (is_chordless_cycle(gg.graph))
                ++rep.cycles[n];
            else
                rep.violations.push_back({gg.graph, "induced P8 but neither a path nor a cycle"});
        }
    }
    return rep;
}

AnatomyReport verify_anatomy_statements(int n_max, int k_min, unsigned threads) {
    if (n_max < 1 || n_max > 13) throw std::invalid_argument("verify_anatomy_statements: n_max must be in [1, 13]");
    if (k_min < 3) throw std::invalid_argument("verify_anatomy_statements: k_min must be at least 3");
    AnatomyReport rep;
    rep.n_max = n_max;
    rep.k_min = k_min;
    const auto levels = bipartite_s113_free(n_max, threads);
    for (int n = 1; n <= n_max; ++n) {
        rep.examined[n] = static_cast<long>(levels[n].size());
        if (n < 2 * k_min + 1) continue;
        for (const auto& gg : levels[n])
            for (const auto& t : maximal_simple_trees(gg.graph, k_min)) {
                ++rep.trees[n];
                auto failed = anatomy_failures(gg.graph, compute_anatomy(gg.graph, t));
                if (failed.empty()) continue;
                std::string detail = tree_text(t) + " failed:";
                for (const auto& f : failed) detail += " " + f;
                rep.violations.push_back({gg.graph, detail});
            }
    }
    return rep;
}

ExtensionReport verify_extension_theorem(int p, int n_max, unsigned threads) {
    if (p != 2) throw std::invalid_argument("verify_extension_theorem: only p = 2 is supported");
    if (n_max < 1 || n_max > 13) throw std::invalid_argument("verify_extension_theorem: n_max must be in [1, 13]");
    ExtensionReport rep;
    rep.p = p;
    rep.n_max = n_max;
    const Pattern tree = Pattern::simple_tree(p + 2);
    const Catalog cat = enumerate_irreducible(n_max, {Pattern::spider(1, 1, 3), Pattern::biclique(p, p)}, threads);
    for (const auto& e : cat.entries) {
        const ColoredBipartite& h = e.graph;
        const int n = h.order();
        ++rep.irreducible[n];
        if (!find_induced(h.graph(), tree)) continue;
        ++rep.with_tree[n];

        EmbedOptions black_centre;
        black_centre.admissible = [&](Vertex x, Vertex t) { return x != 0 || h.is_black(t); };
        if (!find_induced_embedding(h.graph(), tree.graph(), black_centre))
            rep.violations.push_back({h.graph(), "no induced T(" + std::to_string(p + 2) + ") with black centre"});

        int best_k = 0;
        for (const auto& t : maximal_simple_trees(h.graph(), p + 2)) best_k = std::max(best_k, t.k());
        if (n - (2 * best_k + 1) > 4 * p)
            rep.violations.push_back({h.graph(), "largest simple tree T(" + std::to_string(best_k) + ") leaves more than " +
                                                     std::to_string(4 * p) + " vertices"});
    }
    return rep;
}

} // namespace augmis
