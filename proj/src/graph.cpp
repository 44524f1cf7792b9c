#include "augmis/graph.hpp"

#include <algorithm>
#include <string>

namespace augmis {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v)) continue;
        rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(Vertex v) const {
    if (!valid(v))
        throw GraphError("vertex id " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(n_));
}

VertexSet normalize(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) out[v] = v;
    return out;
}

VertexSet neighbourhood(const Graph& g, const VertexSet& u) {
    std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
    for (Vertex x : u) {
        g.check_vertex(x);
        for (Vertex y : g.neighbors(x)) mark[y] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

VertexSet restricted_neighbourhood(const Graph& g, const VertexSet& u, const VertexSet& x) {
    for (Vertex v : x) g.check_vertex(v);
    return set_intersection(neighbourhood(g, u), x);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
    InducedSubgraph out;
    out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v : x) {
        g.check_vertex(v);
        if (out.from_parent[v] >= 0) continue;
        out.from_parent[v] = 0;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (out.from_parent[v] < 0) continue;
        out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        for (Vertex w : g.neighbors(out.to_parent[i])) {
            Vertex j = out.from_parent[w];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

bool is_independent(const Graph& g, const VertexSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        g.check_vertex(x[i]);
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g.adjacent(x[i], x[j])) return false;
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? out.white : out.black).push_back(v);
    return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), edges);
}

} // namespace augmis
