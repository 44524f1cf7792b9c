#include "augmis/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace augmis {
namespace {

void require_positive(const std::vector<int>& params, const char* what) {
    for (int v : params)
        if (v < 1) throw std::invalid_argument(std::string(what) + ": parameters must be positive");
}

std::vector<int> parse_ints(std::string_view body) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        std::string_view tok = body.substr(pos, comma - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad pattern parameter '" + std::string(tok) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

} // namespace

Graph build_pattern(PatternKind kind, const std::vector<int>& params) {
    std::vector<Edge> edges;
    switch (kind) {
    case PatternKind::Spider: {
        if (params.size() != 3) throw std::invalid_argument("S needs three leg lengths");
        require_positive(params, "S");
        int next = 1;
        for (int len : params) {
            Vertex prev = 0;
            for (int step = 0; step < len; ++step) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
        return Graph(next, edges);
    }
    case PatternKind::Path: {
        if (params.size() != 1) throw std::invalid_argument("P needs one parameter");
        require_positive(params, "P");
        for (int v = 1; v < params[0]; ++v) edges.emplace_back(v - 1, v);
        return Graph(params[0], edges);
    }
    case PatternKind::Biclique: {
        if (params.size() != 2) throw std::invalid_argument("K needs two side sizes");
        require_positive(params, "K");
        for (int a = 0; a < params[0]; ++a)
            for (int b = 0; b < params[1]; ++b) edges.emplace_back(a, params[0] + b);
        return Graph(params[0] + params[1], edges);
    }
    case PatternKind::SimpleTree: {
        if (params.size() != 1) throw std::invalid_argument("T needs one parameter");
        require_positive(params, "T");
        const int k = params[0];
        for (int i = 1; i <= k; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(i, k + i);
        }
        return Graph(2 * k + 1, edges);
    }
    case PatternKind::Cycle: {
        if (params.size() != 1) throw std::invalid_argument("C needs one parameter");
        if (params[0] < 3) throw std::invalid_argument("C(n) needs n >= 3");
        for (int v = 0; v < params[0]; ++v) edges.emplace_back(v, (v + 1) % params[0]);
        return Graph(params[0], edges);
    }
    case PatternKind::Explicit:
        break;
    }
    throw std::invalid_argument("explicit patterns carry their own graph");
}

Pattern Pattern::spider(int i, int j, int k) {
    std::vector<int> p{i, j, k};
    Graph g = build_pattern(PatternKind::Spider, p);
    return Pattern(PatternKind::Spider, std::move(p), std::move(g));
}
Pattern Pattern::path(int n) {
    Graph g = build_pattern(PatternKind::Path, {n});
    return Pattern(PatternKind::Path, {n}, std::move(g));
}
Pattern Pattern::biclique(int m, int n) {
    Graph g = build_pattern(PatternKind::Biclique, {m, n});
    return Pattern(PatternKind::Biclique, {m, n}, std::move(g));
}
Pattern Pattern::simple_tree(int k) {
    Graph g = build_pattern(PatternKind::SimpleTree, {k});
    return Pattern(PatternKind::SimpleTree, {k}, std::move(g));
}
Pattern Pattern::cycle(int n) {
    Graph g = build_pattern(PatternKind::Cycle, {n});
    return Pattern(PatternKind::Cycle, {n}, std::move(g));
}
Pattern Pattern::explicit_graph(Graph g, std::string name) {
    return Pattern(PatternKind::Explicit, {}, std::move(g), std::move(name));
}

std::string Pattern::name() const {
    char letter = '?';
    switch (kind_) {
    case PatternKind::Spider: letter = 'S'; break;
    case PatternKind::Path: letter = 'P'; break;
    case PatternKind::Biclique: letter = 'K'; break;
    case PatternKind::SimpleTree: letter = 'T'; break;
    case PatternKind::Cycle: letter = 'C'; break;
    case PatternKind::Explicit: return label_;
    }
    std::string out(1, letter);
    out += '(';
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params_[i]);
    }
    out += ')';
    return out;
}

Pattern Pattern::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() < 4 || text[1] != '(' || text.back() != ')')
        throw std::invalid_argument("unrecognised pattern '" + std::string(text) + "'");
    auto params = parse_ints(text.substr(2, text.size() - 3));
    auto arity = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("wrong parameter count in '" + std::string(text) + "'");
    };
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'S': arity(3); return spider(params[0], params[1], params[2]);
    case 'P': arity(1); return path(params[0]);
    case 'K': arity(2); return biclique(params[0], params[1]);
    case 'T': arity(1); return simple_tree(params[0]);
    case 'C': arity(1); return cycle(params[0]);
    default: break;
    }
    throw std::invalid_argument("unrecognised pattern '" + std::string(text) + "'");
}

std::vector<Pattern> Pattern::parse_list(std::string_view text) {
    std::vector<Pattern> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const bool end = i == text.size();
        if (!end && text[i] == '(') ++depth;
        if (!end && text[i] == ')') --depth;
        if (end || (depth == 0 && (text[i] == ',' || text[i] == ';' || text[i] == ' '))) {
            std::string_view tok = text.substr(start, i - start);
            bool blank = std::all_of(tok.begin(), tok.end(),
                                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
            if (!blank) out.push_back(parse(tok));
            start = i + 1;
        }
    }
    return out;
}

std::optional<Embedding> find_induced(const Graph& g, const Pattern& p) {
    return find_induced_embedding(g, p.graph());
}

std::optional<Embedding> find_induced_through(const Graph& g, const Pattern& p, Vertex v) {
    EmbedOptions options;
    options.must_contain = v;
    return find_induced_embedding(g, p.graph(), options);
}

FreeCheck is_free(const Graph& g, const std::vector<Pattern>& patterns) {
    FreeCheck out;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (auto e = find_induced(g, patterns[i])) {
            out.free = false;
            out.pattern_index = i;
            out.witness = std::move(*e);
            return out;
        }
    }
    return out;
}

VertexSet SimpleTreeCopy::vertices() const {
    VertexSet out{center};
    out.insert(out.end(), middles.begin(), middles.end());
    out.insert(out.end(), leaves.begin(), leaves.end());
    return normalize(std::move(out));
}

bool extends_simple_tree(const Graph& g, const SimpleTreeCopy& t, Vertex a, Vertex b) {
    const Vertex u = t.center;
    if (a == u || b == u || a == b) return false;
    if (!g.adjacent(u, a) || !g.adjacent(a, b) || g.adjacent(u, b)) return false;
    for (std::size_t i = 0; i < t.middles.size(); ++i) {
        for (Vertex x : {t.middles[i], t.leaves[i]}) {
            if (x == a || x == b) return false;
            if (g.adjacent(a, x) || g.adjacent(b, x)) return false;
        }
    }
    return true;
}

std::optional<SimpleTreeCopy> find_max_simple_tree(const Graph& g, Vertex u) {
    g.check_vertex(u);
    SimpleTreeCopy t;
    t.center = u;
    // Constraints only accumulate, so one ascending pass reaches a maximal tree.
    for (Vertex a : g.neighbors(u))
        for (Vertex b : g.neighbors(a))
            if (extends_simple_tree(g, t, a, b)) {
                t.middles.push_back(a);
                t.leaves.push_back(b);
                break;
            }
    if (t.middles.empty()) return std::nullopt;
    return t;
}

std::vector<SimpleTreeCopy> maximal_simple_trees(const Graph& g, int k_min) {
    std::vector<SimpleTreeCopy> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto nbrs = g.neighbors(u);
        SimpleTreeCopy t;
        t.center = u;
        std::function<void(std::size_t)> grow = [&](std::size_t idx) {
            if (t.k() + static_cast<int>(nbrs.size() - idx) < k_min) return;
            if (idx == nbrs.size()) {
                if (t.k() < k_min) return;
                for (Vertex a : nbrs)
                    for (Vertex b : g.neighbors(a))
                        if (extends_simple_tree(g, t, a, b)) return;
                out.push_back(t);
                return;
            }
            const Vertex a = nbrs[idx];
            for (Vertex b : g.neighbors(a)) {
                if (!extends_simple_tree(g, t, a, b)) continue;
                t.middles.push_back(a);
                t.leaves.push_back(b);
                grow(idx + 1);
                t.middles.pop_back();
                t.leaves.pop_back();
            }
            grow(idx + 1);
        };
        grow(0);
    }
    return out;
}

} // namespace augmis
