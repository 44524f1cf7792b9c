#include "augmis/instances.hpp"

#include "augmis/solver.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <string>

namespace augmis {

LineGraph line_graph(const Graph& g) {
    LineGraph lg;
    lg.edges = g.edges();
    if (lg.edges.empty()) throw std::invalid_argument("line_graph: graph has no edges");
    // incident[v]: line-graph vertices whose edge touches v.
    std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < lg.edges.size(); ++i) {
        incident[lg.edges[i].first].push_back(static_cast<Vertex>(i));
        incident[lg.edges[i].second].push_back(static_cast<Vertex>(i));
    }
    std::vector<Edge> e;
    for (const auto& inc : incident)
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) e.emplace_back(inc[i], inc[j]);
    lg.graph = Graph(static_cast<int>(lg.edges.size()), e);
    return lg;
}

int max_matching_size(const Graph& g) {
    const int n = g.order();
    if (n > kMaxMatchingOrder)
        throw std::invalid_argument("max_matching_size: more than " + std::to_string(kMaxMatchingOrder) + " vertices");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << w;
    // best[mask]: matching number of G[mask]; -1 = not computed.
    std::vector<signed char> best(std::size_t{1} << n, -1);
    auto solve = [&](auto&& self, std::uint32_t mask) -> int {
        if (!mask) return 0;
        signed char& slot = best[mask];
        if (slot >= 0) return slot;
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        int out = self(self, rest);
        for (std::uint32_t cand = rest & nbr[v]; cand; cand &= cand - 1) {
            const std::uint32_t w = cand & (~cand + 1);
            out = std::max(out, 1 + self(self, rest & ~w));
        }
        slot = static_cast<signed char>(out);
        return out;
    };
    return solve(solve, n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

namespace {

// Bernoulli trial from the raw generator output, so streams do not depend on
// the standard library's distribution implementations.
bool chance(std::mt19937_64& rng, double prob) {
    if (prob >= 1.0) return true;
    if (prob <= 0.0) return false;
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < prob;
}

} // namespace

Graph gen_free_random(int n, double density, const std::vector<Pattern>& patterns, std::uint64_t seed) {
    if (n < 0 || n > 200) throw std::invalid_argument("gen_free_random: n must be in [0, 200]");
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("gen_free_random: density must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::set<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (chance(rng, density)) edges.emplace(u, v);
    const std::size_t budget = edges.size() + 1;
    for (std::size_t round = 0; round <= budget; ++round) {
        Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
        FreeCheck fc = is_free(g, patterns);
        if (fc.free) return g;
        std::optional<Edge> victim;
        for (auto [a, b] : patterns[*fc.pattern_index].graph().edges()) {
            Edge e = std::minmax(fc.witness[a], fc.witness[b]);
            if (!victim || e < *victim) victim = e;
        }
        if (!victim) break;
        edges.erase(*victim);
    }
    throw GenerationError("gen_free_random: repair did not converge");
}

namespace {

struct Builder {
    int n = 0;
    std::vector<Edge> edges;
    Vertex add() { return n++; }
    void link(Vertex a, Vertex b) { edges.emplace_back(a, b); }
};

bool planted_ok(const Graph& g, const VertexSet& s, const AugCandidate& cand, int p) {
    if (!is_independent(g, s)) return false;
    if (!is_free(g, {Pattern::spider(1, 1, 3), Pattern::biclique(p, p)}).free) return false;
    if (!is_augmenting(g, s, cand)) return false;
    return brute_force_mis(g).alpha == static_cast<int>(s.size()) + 1;
}

} // namespace

PlantedInstance plant_augmenting_tree(const PlantSpec& spec) {
    const int k = spec.k, p = spec.p;
    if (p < 2) throw InfeasibleSpec("plant: p must be at least 2");
    if (k < p + 2) throw InfeasibleSpec("plant: k must be at least p + 2");
    if (spec.extras < 0 || spec.extras > 2 * p) throw InfeasibleSpec("plant: extras must be in [0, 2p]");
    if (spec.noise < 0) throw InfeasibleSpec("plant: noise must be non-negative");
    if (2 * k + 1 + 2 * spec.extras + 2 * spec.noise > kMaxBruteForceOrder)
        throw InfeasibleSpec("plant: instance would exceed " + std::to_string(kMaxBruteForceOrder) + " vertices");

    std::mt19937_64 rng(spec.seed);
    // Extension pairs: x (black, on every middle) with its white c on the
    // centre; y (white, on the centre and every leaf) with a pendant black z;
    // the remainder are pendant white/black pairs hung from the centre.
    // Caps against K(p,p): {u} ∪ xs sees every middle, ys see {u} ∪ leaves,
    // and {u, b_i} ∪ xs is complete to {a_i} ∪ ys.
    const int nx = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(p - 2, spec.extras) + 1));
    int ny_max = std::min(p - 1, spec.extras - nx);
    if (nx > p - 3) ny_max = std::min(ny_max, p - 2);
    const int ny = static_cast<int>(rng() % static_cast<std::uint64_t>(ny_max + 1));
    const int nq = spec.extras - nx - ny;

    Builder b;
    const Vertex u = b.add();
    VertexSet mids, leaves, q1, q2, xs, ys;
    for (int i = 0; i < k; ++i) mids.push_back(b.add());
    for (int i = 0; i < k; ++i) {
        leaves.push_back(b.add());
        b.link(u, mids[i]);
        b.link(mids[i], leaves[i]);
    }
    VertexSet pend_w, pend_b;
    for (int j = 0; j < nq; ++j) {
        Vertex w = b.add(), z = b.add();
        b.link(u, w);
        b.link(w, z);
        pend_w.push_back(w);
        pend_b.push_back(z);
    }
    for (int j = 0; j < nx; ++j) {
        Vertex x = b.add(), c = b.add();
        for (Vertex a : mids) b.link(x, a);
        for (Vertex w : pend_w) b.link(x, w);
        b.link(u, c);
        b.link(c, x);
        xs.push_back(x);
        q1.push_back(c);
        q2.push_back(x);
    }
    for (int j = 0; j < ny; ++j) {
        Vertex y = b.add(), z = b.add();
        b.link(u, y);
        for (Vertex l : leaves) b.link(y, l);
        for (Vertex l : pend_b) b.link(y, l);
        for (Vertex x : xs) b.link(y, x);
        b.link(y, z);
        ys.push_back(y);
        q1.push_back(y);
        q2.push_back(z);
    }
    q1.insert(q1.end(), pend_w.begin(), pend_w.end());
    q2.insert(q2.end(), pend_b.begin(), pend_b.end());

    AugCandidate planted;
    planted.shape = Shape::TreeExtension;
    planted.white = set_union(mids, normalize(q1));
    planted.black = normalize([&] {
        VertexSet bl{u};
        bl.insert(bl.end(), leaves.begin(), leaves.end());
        bl.insert(bl.end(), q2.begin(), q2.end());
        return bl;
    }());
    VertexSet s = planted.white;

    if (!planted_ok(Graph(b.n, b.edges), s, planted, p))
        throw InfeasibleSpec("plant: base construction failed validation");

    // Noise: a white s' and a black r' joined by an edge; s' sees random
    // blacks outside the planted graph, r' sees random vertices anywhere.
    for (int round = 0; round < spec.noise; ++round) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            Builder trial = b;
            const Vertex sw = trial.add(), rb = trial.add();
            trial.link(sw, rb);
            for (Vertex v = 0; v < b.n; ++v) {
                const bool white = contains(s, v);
                if (!white && !contains(planted.black, v) && chance(rng, 0.3)) trial.link(sw, v);
                if (chance(rng, 0.25)) trial.link(rb, v);
            }
            VertexSet s2 = set_union(s, {sw});
            if (planted_ok(Graph(trial.n, trial.edges), s2, planted, p)) {
                b = std::move(trial);
                s = std::move(s2);
                break;
            }
        }
    }

    // Relabel at random so ids carry no hint of the structure.
    std::vector<Vertex> perm(static_cast<std::size_t>(b.n));
    for (Vertex v = 0; v < b.n; ++v) perm[v] = v;
    for (int i = b.n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    auto map_set = [&](const VertexSet& xs_) {
        VertexSet out;
        for (Vertex v : xs_) out.push_back(perm[v]);
        return normalize(std::move(out));
    };
    PlantedInstance out;
    out.graph = permute(Graph(b.n, b.edges), perm);
    out.s = map_set(s);
    out.planted = planted;
    out.planted.white = map_set(planted.white);
    out.planted.black = map_set(planted.black);
    return out;
}

} // namespace augmis
