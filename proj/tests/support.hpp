#pragma once

// Test-only oracles. Everything here is deliberately naive and shares no code
// path with the library routines it is used to check.

#include "augmis/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace augmis::testing {

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i - 1, i);
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

/// Graph on n vertices from the bits of `mask` over the upper triangle.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> e;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if ((mask >> k) & 1U) e.emplace_back(i, j);
    return Graph(n, e);
}

/// Brute-force colour-preserving isomorphism over all permutations.
inline bool isomorphic_brute(const Graph& a, const Graph& b, const std::vector<int>& ca = {},
                             const std::vector<int>& cb = {}) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < a.order() && ok; ++v)
            if (!ca.empty() && ca[v] != cb[perm[v]]) ok = false;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Induced subgraph on an ordered vertex list, without the library helper.
inline Graph induced_on(const Graph& g, const std::vector<int>& verts) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(verts.size()), e);
}

/// Exhaustive induced-subgraph test: every k-subset, every ordering.
inline bool contains_induced_brute(const Graph& g, const Graph& p) {
    const int n = g.order(), k = p.order();
    if (k > n) return false;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (pick[v]) verts.push_back(v);
        if (isomorphic_brute(p, induced_on(g, verts))) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

inline bool is_independent_brute(const Graph& g, std::uint64_t mask) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (((mask >> u) & 1U) && ((mask >> v) & 1U) && g.adjacent(u, v)) return false;
    return true;
}

/// alpha(G) by enumerating every vertex subset (n <= 24).
inline int alpha_brute(const Graph& g) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
        if (std::popcount(mask) > best && is_independent_brute(g, mask)) best = std::popcount(mask);
    return best;
}

} // namespace augmis::testing
