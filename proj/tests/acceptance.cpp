// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (tolerance 0); success rates must be 100%.

#include "augmis/generate.hpp"
#include "augmis/instances.hpp"
#include "augmis/io.hpp"
#include "augmis/irreducible.hpp"
#include "augmis/solver.hpp"
#include "augmis/verify.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace augmis;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome result(bool pass, std::string detail) { return {pass, std::move(detail)}; }

// 1. Solver against brute force on every connected class graph, n <= 9.
Outcome class_sweep() {
    GrowthOptions opt;
    opt.n_max = 9;
    opt.forbidden = {Pattern::spider(1, 1, 3), Pattern::biclique(3, 3)};
    SolveConfig cfg;
    cfg.p = 3;
    cfg.catalog_n_max = 9;
    cfg.catalog = std::make_shared<const Catalog>(enumerate_irreducible(9, catalog_filters(3)));
    long total = 0, wrong = 0;
    for (const auto& level : grow_connected(opt))
        for (const auto& gg : level) {
            ++total;
            if (solve_mis(gg.graph, cfg).alpha != brute_force_mis(gg.graph).alpha) ++wrong;
        }
    return result(wrong == 0 && total > 0,
                  std::to_string(total) + " graphs, " + std::to_string(wrong) + " mismatches");
}

// 2. alpha(L(G)) from the solver equals the matching number of G.
Outcome line_graphs() {
    SolveConfig cfg;
    cfg.p = 3;
    cfg.catalog_n_max = 9;
    cfg.catalog = std::make_shared<const Catalog>(enumerate_irreducible(9, catalog_filters(3)));
    std::mt19937_64 rng(20240601);
    int total = 0, wrong = 0;
    while (total < 1000) {
        const int n = 6 + static_cast<int>(rng() % 9);
        const double density = 0.15 + 0.35 * static_cast<double>(rng() % 1000) / 1000.0;
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (static_cast<double>(rng() % 1000) < 1000.0 * density) e.emplace_back(u, v);
        Graph g(n, e);
        if (g.size() == 0) continue;
        ++total;
        if (solve_mis(line_graph(g).graph, cfg).alpha != max_matching_size(g)) ++wrong;
    }
    return result(wrong == 0, std::to_string(total) + " graphs, " + std::to_string(wrong) + " mismatches");
}

// 3. The three families are irreducible; even paths and cycles never are.
Outcome families() {
    int checks = 0, bad = 0;
    auto expect = [&](bool got, bool want) {
        ++checks;
        if (got != want) ++bad;
    };
    auto both_colourings = [&](const Graph& g) {
        auto bp = bipartition(g);
        if (!bp) return;
        expect(is_irreducible(ColoredBipartite(g, bp->white, bp->black)), false);
        expect(is_irreducible(ColoredBipartite(g, bp->black, bp->white)), false);
    };
    for (int k = 1; k <= 6; ++k) {
        // P(2k+1): even positions black.
        Graph path = Pattern::path(2 * k + 1).graph();
        std::vector<int> pc(2 * k + 1);
        for (int i = 0; i <= 2 * k; ++i) pc[i] = i % 2 == 0;
        expect(is_irreducible(ColoredBipartite::from_colors(path, pc)), true);
        // K(k, k+1): vertices k.. form the larger side.
        Graph kk = Pattern::biclique(k, k + 1).graph();
        std::vector<int> kc(2 * k + 1, 0);
        for (int i = k; i <= 2 * k; ++i) kc[i] = 1;
        expect(is_irreducible(ColoredBipartite::from_colors(kk, kc)), true);
        // T(k): centre and leaves black.
        Graph t = Pattern::simple_tree(k).graph();
        std::vector<int> tc(2 * k + 1, 0);
        tc[0] = 1;
        for (int i = k + 1; i <= 2 * k; ++i) tc[i] = 1;
        expect(is_irreducible(ColoredBipartite::from_colors(t, tc)), true);

        both_colourings(Pattern::path(2 * k).graph());
        if (k >= 2) both_colourings(Pattern::cycle(2 * k).graph());
    }
    return result(bad == 0, std::to_string(checks) + " verdicts, " + std::to_string(bad) + " wrong");
}

// 4. Matching-based Hall surplus test against subset enumeration.
Outcome hall() {
    long total = 0, wrong = 0;
    for (int n = 1; n <= 8; ++n)
        for (int w = 0; w <= n; ++w) {
            const int b = n - w, pairs = w * b;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                std::vector<Edge> e;
                std::vector<std::uint32_t> nb(static_cast<std::size_t>(w), 0);
                for (int i = 0; i < w; ++i)
                    for (int j = 0; j < b; ++j)
                        if ((mask >> (i * b + j)) & 1U) {
                            e.emplace_back(i, w + j);
                            nb[i] |= std::uint32_t{1} << j;
                        }
                VertexSet white, black;
                for (int i = 0; i < w; ++i) white.push_back(i);
                for (int j = 0; j < b; ++j) black.push_back(w + j);
                ColoredBipartite h(Graph(n, e), white, black);
                bool brute = true;
                for (std::uint32_t a = 1; a < (std::uint32_t{1} << w) && brute; ++a) {
                    std::uint32_t reach = 0;
                    for (int i = 0; i < w; ++i)
                        if ((a >> i) & 1U) reach |= nb[i];
                    brute = std::popcount(reach) >= std::popcount(a) + 1;
                }
                ++total;
                if (hall_surplus_check(h) != brute) ++wrong;
            }
        }
    return result(wrong == 0, std::to_string(total) + " coloured graphs, " + std::to_string(wrong) + " disagreements");
}

// 5.
Outcome path_or_cycle() {
    PathOrCycleReport r = verify_path_or_cycle(11);
    long with = 0, examined = 0;
    for (auto [n, c] : r.with_p8) with += c;
    for (auto [n, c] : r.examined) examined += c;
    return result(r.violations.empty() && with > 0,
                  std::to_string(examined) + " graphs, " + std::to_string(with) + " with P8, " +
                      std::to_string(r.violations.size()) + " violations");
}

// 6.
Outcome anatomy() {
    AnatomyReport r = verify_anatomy_statements(11, 3);
    long trees = 0;
    for (auto [n, c] : r.trees) trees += c;
    return result(r.violations.empty() && trees > 0,
                  std::to_string(trees) + " maximal trees, " + std::to_string(r.violations.size()) + " violations");
}

// 7. Planted tree extensions are found and raise alpha by exactly one.
Outcome planted() {
    int total = 0, ok = 0;
    for (std::uint64_t seed = 0; total < 200; ++seed) {
        const int p = 2 + static_cast<int>(seed % 2);
        const int k = p + 2 + static_cast<int>((seed / 2) % (5 - p));  // k in [p+2, 6]
        const int extras = static_cast<int>((seed / 7) % (2 * p + 1));
        int noise = static_cast<int>((seed / 3) % 3);
        while (2 * k + 1 + 2 * extras + 2 * noise > kMaxBruteForceOrder) --noise;
        PlantedInstance inst = plant_augmenting_tree({k, p, extras, noise, seed});
        ++total;
        TreeSearchResult r = find_tree_extension(inst.graph, inst.s, p);
        if (!r.candidate || !is_augmenting(inst.graph, inst.s, *r.candidate)) continue;
        VertexSet t = augment(inst.graph, inst.s, *r.candidate);
        const int alpha = brute_force_mis(inst.graph).alpha;
        if (t.size() == inst.s.size() + 1 && alpha == static_cast<int>(t.size()) && is_independent(inst.graph, t)) ++ok;
    }
    return result(ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances");
}

// 8. Finite census, deterministic output, and no misclassified exclusions.
Outcome census() {
    const auto filters = Pattern::parse_list("P(8),T(4),K(3,3)");
    Catalog a = enumerate_irreducible(9, filters), b = enumerate_irreducible(9, filters);
    std::ostringstream sa, sb;
    write_catalog(sa, a);
    write_catalog(sb, b);
    const bool identical = sa.str() == sb.str();

    std::set<Code> kept;
    for (const auto& e : a.entries) kept.insert(e.code);
    long misses = 0, excluded = 0;
    for (const auto& e : enumerate_irreducible(9, {}).entries) {
        bool hit = false;
        for (const auto& f : filters) hit = hit || find_induced(e.graph.graph(), f).has_value();
        if (kept.count(e.code)) {
            if (hit) ++misses;
        } else {
            ++excluded;
            if (!hit) ++misses;
        }
    }
    MinClassesReport mc = verify_min_classes(9, 4);
    std::string counts;
    for (auto [n, c] : a.census()) counts += " " + std::to_string(n) + ":" + std::to_string(c);
    return result(identical && misses == 0 && mc.misses() == 0,
                  "census" + counts + ", " + std::to_string(excluded) + " excluded, " +
                      std::to_string(misses + mc.misses()) + " misses, rerun " + (identical ? "identical" : "differs"));
}

// 9. Minimal N for t = p = 2, stable and certified.
Outcome ramsey() {
    RamseyResult a = bipartite_ramsey_bound(2, 2), b = bipartite_ramsey_bound(2, 2);
    bool stable = a.bound == b.bound && a.witness.has_value() == b.witness.has_value() &&
                  (!a.witness || a.witness->graph() == b.witness->graph());
    bool witness_ok = a.bound == 1;
    if (a.witness) {
        // Perfect matching w_i b_i of size N - 1, no C4, no induced 2K2.
        const auto& h = *a.witness;
        const int m = a.bound - 1;
        witness_ok = h.order() == 2 * m && static_cast<int>(max_bipartite_matching(h).size()) == m;
        for (Vertex w1 : h.white())
            for (Vertex w2 : h.white())
                for (Vertex b1 : h.black())
                    for (Vertex b2 : h.black()) {
                        if (w1 >= w2 || b1 >= b2) continue;
                        const Graph& g = h.graph();
                        const int edges = g.adjacent(w1, b1) + g.adjacent(w1, b2) + g.adjacent(w2, b1) + g.adjacent(w2, b2);
                        if (edges == 4) witness_ok = false;
                        if (edges == 2 && ((g.adjacent(w1, b1) && g.adjacent(w2, b2)) ||
                                           (g.adjacent(w1, b2) && g.adjacent(w2, b1))))
                            witness_ok = false;
                    }
    }
    const int n = a.bound;
    const std::size_t expected = std::size_t{1} << (n * n - n);
    const bool exhaustive = a.certified == expected;
    return result(stable && witness_ok && exhaustive,
                  "N=" + std::to_string(a.bound) + ", " + std::to_string(a.certified) + "/" +
                      std::to_string(expected) + " graphs at N confirmed, witness " + (witness_ok ? "valid" : "invalid"));
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"solver equals brute force on all connected S(1,1,3),K(3,3)-free graphs, n <= 9", class_sweep},
        {"solver on 1000 random line graphs equals the matching number", line_graphs},
        {"path, biclique and simple-tree families irreducible; even paths and cycles not", families},
        {"Hall surplus check equals subset enumeration on coloured bipartite graphs, n <= 8", hall},
        {"connected bipartite S(1,1,3)-free graphs with induced P8, n <= 11, are paths or cycles", path_or_cycle},
        {"structure statements around maximal T_k, k >= 3, n <= 11", anatomy},
        {"tree-extension finder on 200 planted instances", planted},
        {"irreducible census for P(8),T(4),K(3,3) up to 9 vertices", census},
        {"bipartite Ramsey bound for t = p = 2", ramsey},
    };
    // Optional: run a single criterion by number.
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && only != static_cast<int>(i + 1)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%zu] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
