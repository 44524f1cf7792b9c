#include "augmis/irreducible.hpp"

#include "augmis/generate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>

namespace augmis {

ColoredBipartite::ColoredBipartite(Graph g, VertexSet white, VertexSet black)
    : graph_(std::move(g)), white_(normalize(std::move(white))), black_(normalize(std::move(black))) {
    for (Vertex v : white_) graph_.check_vertex(v);
    for (Vertex v : black_) graph_.check_vertex(v);
    if (!set_intersection(white_, black_).empty()) throw GraphError("colour classes overlap");
    if (white_.size() + black_.size() != static_cast<std::size_t>(graph_.order()))
        throw GraphError("colour classes do not cover the vertex set");
    if (!is_independent(graph_, white_) || !is_independent(graph_, black_))
        throw GraphError("colour class is not independent");
    colors_.assign(static_cast<std::size_t>(graph_.order()), 0);
    for (Vertex v : black_) colors_[v] = 1;
}

ColoredBipartite ColoredBipartite::from_colors(Graph g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.order()) throw GraphError("colour vector length mismatch");
    VertexSet w, b;
    for (Vertex v = 0; v < g.order(); ++v) (colors[v] ? b : w).push_back(v);
    return ColoredBipartite(std::move(g), std::move(w), std::move(b));
}

namespace {

// Kuhn's augmenting-path matching from the white side; `banned` black vertex
// is treated as deleted.
int matching_size(const ColoredBipartite& h, Vertex banned, std::vector<Vertex>* mate_of_black) {
    const Graph& g = h.graph();
    std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> stamp(static_cast<std::size_t>(g.order()), -1);
    int round = 0;
    std::function<bool(Vertex)> try_white = [&](Vertex w) {
        for (Vertex b : g.neighbors(w)) {
            if (b == banned || stamp[b] == round) continue;
            stamp[b] = round;
            if (mate[b] < 0 || try_white(mate[b])) {
                mate[b] = w;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (Vertex w : h.white()) {
        if (try_white(w)) ++size;
        ++round;
    }
    if (mate_of_black) *mate_of_black = std::move(mate);
    return size;
}

} // namespace

std::vector<Edge> max_bipartite_matching(const ColoredBipartite& h) {
    std::vector<Vertex> mate;
    matching_size(h, -1, &mate);
    std::vector<Edge> out;
    for (Vertex b : h.black())
        if (mate[b] >= 0) out.emplace_back(mate[b], b);
    std::sort(out.begin(), out.end());
    return out;
}

bool hall_surplus_check(const ColoredBipartite& h) {
    const int whites = static_cast<int>(h.white().size());
    if (whites == 0) return true;
    for (Vertex b : h.black())
        if (matching_size(h, b, nullptr) < whites) return false;
    // With no black vertex to delete the condition still needs N(A) > |A|.
    return !h.black().empty();
}

bool is_irreducible(const ColoredBipartite& h) {
    if (h.white().size() + 1 != h.black().size()) return false;
    if (!is_connected(h.graph())) return false;
    return hall_surplus_check(h);
}

Code canonical_code(const ColoredBipartite& h) {
    if (h.order() > kMaxEnumerationOrder)
        throw std::invalid_argument("canonical_code supports at most " + std::to_string(kMaxEnumerationOrder) +
                                    " vertices");
    return canonical_form(h.graph(), h.colors()).code;
}

ColoredBipartite decode_colored(const Code& code) {
    auto d = decode_code(code);
    if (d.colors.empty() && d.graph.order() > 0) throw std::invalid_argument("code carries no colouring");
    return ColoredBipartite::from_colors(std::move(d.graph), d.colors);
}

std::map<int, int> Catalog::census() const {
    std::map<int, int> out;
    for (const auto& e : entries) ++out[e.graph.order()];
    return out;
}

std::vector<Pattern> catalog_filters(int p) {
    if (p < 1) throw std::invalid_argument("class parameter p must be positive");
    return {Pattern::path(8), Pattern::simple_tree(p + 2), Pattern::biclique(p, p)};
}

Catalog enumerate_irreducible(int n_max, const std::vector<Pattern>& filters, unsigned threads) {
    if (n_max < 0 || n_max > kMaxEnumerationOrder)
        throw BoundExceeded("n_max must lie in 0.." + std::to_string(kMaxEnumerationOrder));
    GrowthOptions opt;
    opt.n_max = n_max;
    opt.mode = GrowthMode::ColoredBipartite;
    opt.forbidden = filters;
    opt.target_balance = 1;
    opt.threads = threads;
    Catalog cat;
    cat.max_vertices = n_max;
    cat.filters = filters;
    auto levels = grow_connected(opt);
    for (auto& level : levels)
        for (auto& g : level) {
            auto h = ColoredBipartite::from_colors(std::move(g.graph), g.colors);
            if (h.black().size() != h.white().size() + 1 || !hall_surplus_check(h)) continue;
            cat.entries.push_back(CatalogEntry{std::move(g.code), std::move(h)});
        }
    return cat;
}

bool has_biclique(const ColoredBipartite& h, int t) {
    const auto& whites = h.white();
    if (t <= 0) return true;
    if (static_cast<int>(whites.size()) < t) return false;
    std::vector<std::uint64_t> mask(whites.size());
    for (std::size_t i = 0; i < whites.size(); ++i)
        for (Vertex b : h.graph().neighbors(whites[i])) mask[i] |= std::uint64_t{1} << b;
    std::function<bool(std::size_t, int, std::uint64_t)> pick = [&](std::size_t from, int left, std::uint64_t common) {
        if (std::popcount(common) < t) return false;
        if (left == 0) return true;
        for (std::size_t i = from; i < whites.size(); ++i)
            if (pick(i + 1, left - 1, common & mask[i])) return true;
        return false;
    };
    return pick(0, t, ~std::uint64_t{0});
}

bool has_induced_matching(const ColoredBipartite& h, int p) {
    const Graph& g = h.graph();
    auto edges = g.edges();
    std::vector<Edge> chosen;
    std::function<bool(std::size_t)> pick = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == p) return true;
        for (std::size_t i = from; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            bool ok = true;
            for (auto [c, d] : chosen)
                if (a == c || a == d || b == c || b == d || g.adjacent(a, c) || g.adjacent(a, d) ||
                    g.adjacent(b, c) || g.adjacent(b, d)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(edges[i]);
            if (pick(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(0);
}

RamseyResult bipartite_ramsey_bound(int t, int p, int max_free_pairs) {
    if (t < 1 || p < 1) throw std::invalid_argument("t and p must be positive");
    RamseyResult out;
    out.t = t;
    out.p = p;
    for (int n = 1;; ++n) {
        const int free_pairs = n * n - n;
        if (free_pairs > max_free_pairs)
            throw BoundExceeded("bipartite Ramsey search for t=" + std::to_string(t) + ", p=" + std::to_string(p) +
                                " needs 2^" + std::to_string(free_pairs) + " graphs at matching size " +
                                std::to_string(n) + "; budget is 2^" + std::to_string(max_free_pairs));
        std::vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) pairs.emplace_back(i, n + j);
        VertexSet whites(static_cast<std::size_t>(n)), blacks(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            whites[i] = i;
            blacks[i] = n + i;
        }
        std::optional<ColoredBipartite> avoider;
        std::size_t examined = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pairs); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
            for (int k = 0; k < free_pairs; ++k)
                if ((mask >> k) & 1U) edges.push_back(pairs[k]);
            ColoredBipartite h(Graph(2 * n, edges), whites, blacks);
            ++examined;
            if (!has_biclique(h, t) && !has_induced_matching(h, p)) {
                avoider = std::move(h);
                break;
            }
        }
        if (!avoider) {
            out.bound = n;
            out.certified = examined;
            return out;
        }
        out.witness = std::move(avoider);
    }
}

int MinClassesReport::misses() const {
    int total = 0;
    for (const auto& l : levels) total += l.misses;
    return total;
}

MinClassesReport verify_min_classes(int n_max, int t, unsigned threads) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    const std::vector<Pattern> forbidden{Pattern::path(t), Pattern::biclique(t - 1, t), Pattern::simple_tree(t)};
    Catalog all = enumerate_irreducible(n_max, {}, threads);
    Catalog census = enumerate_irreducible(n_max, forbidden, threads);
    std::set<Code> census_codes;
    for (const auto& e : census.entries) census_codes.insert(e.code);

    MinClassesReport report;
    report.t = t;
    report.n_max = n_max;
    report.levels.resize(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) report.levels[n - 1].n = n;
    std::set<Code> seen_free;
    for (const auto& e : all.entries) {
        auto& level = report.levels[e.graph.order() - 1];
        ++level.irreducible;
        const Graph& g = e.graph.graph();
        bool hit = false;
        int* counters[] = {&level.with_path, &level.with_biclique, &level.with_tree};
        for (std::size_t i = 0; i < forbidden.size(); ++i) {
            auto w = find_induced(g, forbidden[i]);
            if (!w) continue;
            // The witness must be a genuine induced copy.
            VertexSet image(w->begin(), w->end());
            auto sub = induced_subgraph(g, normalize(image));
            bool ok = sub.graph.size() == forbidden[i].graph().size();
            for (auto [a, b] : forbidden[i].graph().edges()) ok = ok && g.adjacent((*w)[a], (*w)[b]);
            if (!ok) ++level.misses;
            ++*counters[i];
            hit = true;
        }
        if (!hit) {
            ++level.census;
            seen_free.insert(e.code);
            if (!census_codes.count(e.code)) ++level.misses;
        } else if (census_codes.count(e.code)) {
            ++level.misses;
        }
    }
    // Filtered enumeration must not produce anything the full one lacks.
    for (const auto& e : census.entries)
        if (!seen_free.count(e.code)) ++report.levels[e.graph.order() - 1].misses;
    return report;
}

} // namespace augmis
