#include "augmis/solver.hpp"

#include "augmis/io.hpp"
#include "augmis/patterns.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace augmis {

VertexSet greedy_initial(const Graph& g) {
    VertexSet s;
    std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (blocked[v]) continue;
        s.push_back(v);
        for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    }
    return s;
}

VertexSet augment(const Graph& g, const VertexSet& s, const AugCandidate& cand) {
    if (!is_augmenting(g, s, cand)) throw std::logic_error("augment: candidate is not augmenting");
    return set_union(set_difference(s, cand.white), cand.black);
}

SolveResult solve_mis(const Graph& g, const SolveConfig& cfg) {
    if (cfg.p < 2) throw std::invalid_argument("p must be at least 2");
    if (cfg.catalog_n_max < 3) throw std::invalid_argument("catalog_n_max must be at least 3");

    SolveResult res;
    if (cfg.validate_class) {
        const std::vector<Pattern> cls{Pattern::spider(1, 1, 3), Pattern::biclique(cfg.p, cfg.p)};
        FreeCheck fc = is_free(g, cls);
        if (!fc.free) {
            res.violation_pattern = cls[*fc.pattern_index].name();
            res.class_violation_witness = fc.witness;
        }
    }
    std::shared_ptr<const Catalog> cat = cfg.catalog ? cfg.catalog : load_or_build_catalog(cfg.p, cfg.catalog_n_max);

    VertexSet s = greedy_initial(g);
    while (true) {
        std::optional<AugCandidate> cand = find_augmenting_path(g, s, cfg.path_max_len);
        if (cand) {
            ++res.hits.path;
        } else {
            TreeSearchResult t = find_tree_extension(g, s, cfg.p);
            res.tree_violations.insert(res.tree_violations.end(), t.class_violations.begin(),
                                       t.class_violations.end());
            cand = std::move(t.candidate);
            if (cand) {
                ++res.hits.tree;
            } else {
                cand = find_from_catalog(g, s, *cat);
                if (!cand) break;
                ++res.hits.catalog;
            }
        }
        s = augment(g, s, *cand);
        if (++res.iterations > g.order()) throw std::logic_error("more augmentations than vertices");
    }
    res.alpha = static_cast<int>(s.size());
    res.independent_set = std::move(s);
    return res;
}

namespace {

using Mask = std::uint32_t;

struct MisSearch {
    std::vector<Mask> nbr;
    int best = -1;
    Mask best_set = 0;

    // Greedy clique cover of the candidates: an upper bound on what they add.
    int bound(Mask cand) const {
        int cliques = 0;
        while (cand) {
            Mask clique = cand & (~cand + 1);
            Mask open = cand & nbr[std::countr_zero(clique)];
            while (open) {
                Mask v = open & (~open + 1);
                clique |= v;
                open &= nbr[std::countr_zero(v)];
            }
            cand &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void run(Mask chosen, int size, Mask cand) {
        if (!cand) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        if (size + bound(cand) <= best) return;
        const int v = std::countr_zero(cand);
        const Mask bit = Mask{1} << v;
        run(chosen | bit, size + 1, cand & ~bit & ~nbr[v]);
        run(chosen, size, cand & ~bit);
    }
};

} // namespace

MisResult brute_force_mis(const Graph& g) {
    if (g.order() > kMaxBruteForceOrder)
        throw std::invalid_argument("brute_force_mis: more than " + std::to_string(kMaxBruteForceOrder) + " vertices");
    MisSearch search;
    search.nbr.assign(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) search.nbr[v] |= Mask{1} << w;
    const Mask all = g.order() == 32 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
    search.run(0, 0, all);
    MisResult res;
    res.alpha = search.best;
    for (Vertex v = 0; v < g.order(); ++v)
        if ((search.best_set >> v) & 1U) res.witness.push_back(v);
    return res;
}

} // namespace augmis
