#include "augmis/finders.hpp"

#include "augmis/embed.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace augmis {

const char* shape_name(Shape s) {
    switch (s) {
    case Shape::Path: return "path";
    case Shape::TreeExtension: return "tree";
    case Shape::Catalog: return "catalog";
    }
    return "?";
}

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& s) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) {
        g.check_vertex(v);
        in[v] = 1;
    }
    return in;
}

// N_S(v) for every vertex.
std::vector<VertexSet> s_neighbours(const Graph& g, const std::vector<char>& in_s) {
    std::vector<VertexSet> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v))
            if (in_s[w]) out[v].push_back(w);
    return out;
}

void require_independent(const Graph& g, const VertexSet& s) {
    if (!is_independent(g, s)) throw PreconditionError("S is not an independent set");
}

} // namespace

bool is_augmenting(const Graph& g, const VertexSet& s, const AugCandidate& cand) {
    for (const VertexSet* set : {&s, &cand.white, &cand.black})
        for (Vertex v : *set)
            if (!g.valid(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (!is_independent(g, s)) throw PreconditionError("S is not an independent set");
    if (!is_subset(cand.white, s)) throw PreconditionError("W is not a subset of S");
    if (!set_intersection(cand.black, s).empty()) throw PreconditionError("B meets S");
    if (cand.black.size() <= cand.white.size()) return false;
    if (!is_independent(g, cand.black)) return false;
    return is_subset(restricted_neighbourhood(g, cand.black, s), cand.white);
}

std::optional<AugCandidate> find_augmenting_path(const Graph& g, const VertexSet& s, std::optional<int> max_len) {
    require_independent(g, s);
    const auto in_s = membership(g, s);
    const auto sn = s_neighbours(g, in_s);
    const int n = g.order();

    for (Vertex b = 0; b < n; ++b)
        if (!in_s[b] && sn[b].empty()) return AugCandidate{{}, {b}, Shape::Path, std::nullopt, -1};

    // ends[w]: black vertices whose only S-neighbour is w.
    // links[w]: (black, other white) for blacks with exactly two S-neighbours.
    std::vector<std::vector<Vertex>> ends(static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<Vertex, Vertex>>> links(static_cast<std::size_t>(n));
    for (Vertex b = 0; b < n; ++b) {
        if (in_s[b]) continue;
        if (sn[b].size() == 1) ends[sn[b][0]].push_back(b);
        if (sn[b].size() == 2) {
            links[sn[b][0]].emplace_back(b, sn[b][1]);
            links[sn[b][1]].emplace_back(b, sn[b][0]);
        }
    }
    for (auto& l : links) std::sort(l.begin(), l.end());

    const int max_whites = max_len ? std::max(0, *max_len / 2) : n;
    std::vector<Vertex> blacks, whites;
    std::vector<char> used_white(static_cast<std::size_t>(n), 0);
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    int stamp = 0;

    auto clear_of_path = [&](Vertex b) {
        return std::none_of(blacks.begin(), blacks.end(), [&](Vertex x) { return g.adjacent(b, x); });
    };
    // Relaxation: some unused white reachable from w owns an end black other
    // than the start (black adjacency ignored).
    auto may_finish = [&](Vertex w, Vertex start) {
        ++stamp;
        std::vector<Vertex> queue{w};
        seen[w] = stamp;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (Vertex e : ends[x])
                if (e != start) return true;
            for (auto [b, y] : links[x])
                if (!used_white[y] && seen[y] != stamp) {
                    seen[y] = stamp;
                    queue.push_back(y);
                }
        }
        return false;
    };

    std::optional<AugCandidate> found;
    std::function<bool(Vertex)> extend = [&](Vertex start) -> bool {
        const Vertex w = whites.back();
        for (Vertex e : ends[w])
            if (e != start && clear_of_path(e)) {
                AugCandidate c;
                c.white = normalize(whites);
                c.black = blacks;
                c.black.push_back(e);
                c.black = normalize(std::move(c.black));
                c.shape = Shape::Path;
                found = std::move(c);
                return true;
            }
        if (static_cast<int>(whites.size()) >= max_whites) return false;
        if (!may_finish(w, start)) return false;
        for (auto [b, next] : links[w]) {
            if (used_white[next] || !clear_of_path(b)) continue;
            blacks.push_back(b);
            whites.push_back(next);
            used_white[next] = 1;
            bool done = extend(start);
            used_white[next] = 0;
            whites.pop_back();
            blacks.pop_back();
            if (done) return true;
        }
        return false;
    };

    if (max_whites < 1) return std::nullopt;
    for (Vertex start = 0; start < n; ++start) {
        if (in_s[start] || sn[start].size() != 1) continue;
        const Vertex w = sn[start][0];
        blacks.assign(1, start);
        whites.assign(1, w);
        used_white[w] = 1;
        bool done = extend(start);
        used_white[w] = 0;
        if (done) return found;
    }
    return std::nullopt;
}

TreeSearchResult find_tree_extension(const Graph& g, const VertexSet& s, int p) {
    if (p < 2) throw std::invalid_argument("tree-extension search needs p >= 2");
    require_independent(g, s);
    const auto in_s = membership(g, s);
    const auto sn = s_neighbours(g, in_s);
    const int n = g.order();
    VertexSet r;
    for (Vertex v = 0; v < n; ++v)
        if (!in_s[v]) r.push_back(v);

    TreeSearchResult result;
    const std::size_t need = static_cast<std::size_t>(p) + 2;
    VertexSet centres;
    for (Vertex u : r)
        if (sn[u].size() >= need) centres.push_back(u);
    if (centres.empty()) return result;

    const int q_max = std::min<int>({2 * p, static_cast<int>(s.size()), static_cast<int>(r.size())});
    std::vector<char> in_q1(static_cast<std::size_t>(n), 0);

    // Searches Q2 (lexicographic, stopping before `bound`) for a fixed
    // (Q1, u); returns the first Q2 that completes, with its extension.
    auto search_u = [&](Vertex u, const VertexSet& q1, int q,
                        const std::optional<VertexSet>& bound) -> std::optional<TreeExtension> {
        VertexSet a0;
        for (Vertex a : sn[u])
            if (!in_q1[a]) a0.push_back(a);
        if (a0.size() < need) return std::nullopt;
        std::vector<char> allowed(static_cast<std::size_t>(n), 0);
        for (Vertex a : sn[u]) allowed[a] = 1;
        for (Vertex a : q1) allowed[a] = 1;

        // L_i before removing Q2 and its neighbours.
        std::vector<VertexSet> base(a0.size());
        for (Vertex v : r) {
            if (v == u || g.adjacent(v, u)) continue;
            Vertex only = -1;
            int count = 0;
            for (Vertex x : sn[v])
                if (!in_q1[x]) {
                    only = x;
                    ++count;
                }
            if (count != 1) continue;
            auto it = std::lower_bound(a0.begin(), a0.end(), only);
            if (it != a0.end() && *it == only) base[it - a0.begin()].push_back(v);
        }
        for (const auto& l : base)
            if (l.empty()) return std::nullopt;

        VertexSet pool;
        for (Vertex v : r) {
            if (v == u || g.adjacent(v, u)) continue;
            if (std::all_of(sn[v].begin(), sn[v].end(), [&](Vertex x) { return allowed[x] != 0; }))
                pool.push_back(v);
        }
        if (static_cast<int>(pool.size()) < q) return std::nullopt;

        VertexSet q2;
        std::optional<TreeExtension> hit;
        std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
            if (bound && q2.size() == bound->size() && q2 >= *bound) return true;
            if (static_cast<int>(q2.size()) == q) {
                TreeExtension t;
                t.center = u;
                t.middles = a0;
                t.extra_white = q1;
                t.extra_black = q2;
                for (const auto& l : base) {
                    VertexSet li;
                    for (Vertex v : l)
                        if (!contains(q2, v) &&
                            std::none_of(q2.begin(), q2.end(), [&](Vertex x) { return g.adjacent(v, x); }))
                            li.push_back(v);
                    if (li.empty()) return false;
                    t.leaves.push_back(li.front());
                    t.candidates.push_back(std::move(li));
                }
                bool clean = true;
                for (std::size_t i = 0; i < t.leaves.size(); ++i)
                    for (std::size_t j = i + 1; j < t.leaves.size(); ++j)
                        if (g.adjacent(t.leaves[i], t.leaves[j])) {
                            result.class_violations.emplace_back(t.leaves[i], t.leaves[j]);
                            clean = false;
                        }
                if (!clean) return false;
                hit = std::move(t);
                return true;
            }
            for (std::size_t i = from; i + (q - q2.size()) <= pool.size(); ++i) {
                Vertex v = pool[i];
                if (std::any_of(q2.begin(), q2.end(), [&](Vertex x) { return g.adjacent(v, x); })) continue;
                q2.push_back(v);
                bool stop = choose(i + 1);
                q2.pop_back();
                if (stop) return true;
            }
            return false;
        };
        choose(0);
        return hit;
    };

    for (int q = 0; q <= q_max; ++q) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) idx[i] = static_cast<std::size_t>(i);
        while (true) {
            VertexSet q1;
            for (auto i : idx) q1.push_back(s[i]);
            for (Vertex x : q1) in_q1[x] = 1;

            std::optional<TreeExtension> best;
            for (Vertex u : centres) {
                std::optional<VertexSet> bound;
                if (best) bound = best->extra_black;
                auto t = search_u(u, q1, q, bound);
                if (t && (!best || t->extra_black < best->extra_black)) best = std::move(t);
            }
            for (Vertex x : q1) in_q1[x] = 0;
            if (best) {
                AugCandidate c;
                c.white = set_union(best->middles, best->extra_white);
                VertexSet black{best->center};
                black.insert(black.end(), best->leaves.begin(), best->leaves.end());
                black.insert(black.end(), best->extra_black.begin(), best->extra_black.end());
                c.black = normalize(std::move(black));
                c.shape = Shape::TreeExtension;
                c.tree = std::move(best);
                if (!is_augmenting(g, s, c)) throw std::logic_error("tree-extension candidate is not augmenting");
                result.candidate = std::move(c);
                return result;
            }
            // Next q-combination of indices into s.
            int pos = q - 1;
            while (pos >= 0 && idx[pos] == s.size() - static_cast<std::size_t>(q - pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return result;
}

std::optional<AugCandidate> find_from_catalog(const Graph& g, const VertexSet& s, const Catalog& cat) {
    require_independent(g, s);
    const auto in_s = membership(g, s);
    const auto sn = s_neighbours(g, in_s);
    const std::size_t r_size = static_cast<std::size_t>(g.order()) - s.size();
    for (std::size_t idx = 0; idx < cat.entries.size(); ++idx) {
        const ColoredBipartite& h = cat.entries[idx].graph;
        if (h.white().size() > s.size() || h.black().size() > r_size) continue;
        EmbedOptions opt;
        opt.admissible = [&](Vertex x, Vertex t) {
            if (!h.is_black(x)) return in_s[t] != 0;
            return !in_s[t] && static_cast<int>(sn[t].size()) == h.graph().degree(x);
        };
        auto e = find_induced_embedding(g, h.graph(), opt);
        if (!e) continue;
        AugCandidate c;
        for (Vertex x = 0; x < h.order(); ++x) (h.is_black(x) ? c.black : c.white).push_back((*e)[x]);
        c.white = normalize(std::move(c.white));
        c.black = normalize(std::move(c.black));
        c.shape = Shape::Catalog;
        c.catalog_entry = static_cast<int>(idx);
        return c;
    }
    return std::nullopt;
}

} // namespace augmis
