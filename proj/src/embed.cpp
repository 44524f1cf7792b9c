#include "augmis/embed.hpp"

#include <algorithm>

namespace augmis {
namespace {

std::vector<Vertex> placement_order(const Graph& pattern, std::optional<Vertex> first) {
    const int n = pattern.order();
    std::vector<Vertex> order;
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    auto place = [&](Vertex x) {
        order.push_back(x);
        placed[x] = 1;
        for (Vertex y : pattern.neighbors(x)) ++placed_nbrs[y];
    };
    if (first) place(*first);
    while (static_cast<int>(order.size()) < n) {
        Vertex best = -1;
        for (Vertex x = 0; x < n; ++x) {
            if (placed[x]) continue;
            if (best < 0 || placed_nbrs[x] > placed_nbrs[best] ||
                (placed_nbrs[x] == placed_nbrs[best] && pattern.degree(x) > pattern.degree(best)))
                best = x;
        }
        place(best);
    }
    return order;
}

class Search {
public:
    Search(const Graph& target, const Graph& pattern, const EmbedOptions& options,
           const std::function<bool(const Embedding&)>& visit)
        : target_(target), pattern_(pattern), options_(options), visit_(visit),
          map_(static_cast<std::size_t>(pattern.order()), -1),
          used_(static_cast<std::size_t>(target.order()), 0) {}

    bool run() {
        if (pattern_.order() > target_.order()) return false;
        if (pattern_.order() == 0) {
            if (options_.must_contain) return false;
            return !visit_(map_);
        }
        if (!options_.must_contain) {
            set_order(placement_order(pattern_, std::nullopt));
            return extend(0);
        }
        // Every pattern vertex in turn takes the required target vertex.
        const Vertex pinned = *options_.must_contain;
        for (Vertex x = 0; x < pattern_.order(); ++x) {
            if (!admissible(x, pinned)) continue;
            set_order(placement_order(pattern_, x));
            assign(x, pinned);
            bool stop = extend(1);
            unassign(x, pinned);
            if (stop) return true;
        }
        return false;
    }

private:
    void set_order(std::vector<Vertex> order) {
        order_ = std::move(order);
        anchor_.assign(order_.size(), -1);
        std::vector<int> pos(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            int best = -1;
            for (Vertex y : pattern_.neighbors(order_[i]))
                if (pos[y] < static_cast<int>(i) && (best < 0 || pos[y] < pos[best])) best = y;
            anchor_[i] = best;
        }
    }

    bool admissible(Vertex x, Vertex t) const {
        if (used_[t]) return false;
        if (target_.degree(t) < pattern_.degree(x)) return false;
        if (options_.admissible && !options_.admissible(x, t)) return false;
        return true;
    }

    bool consistent(std::size_t depth, Vertex x, Vertex t) const {
        for (std::size_t i = 0; i < depth; ++i) {
            Vertex y = order_[i];
            if (pattern_.adjacent(x, y) != target_.adjacent(t, map_[y])) return false;
        }
        return true;
    }

    void assign(Vertex x, Vertex t) {
        map_[x] = t;
        used_[t] = 1;
    }
    void unassign(Vertex x, Vertex t) {
        map_[x] = -1;
        used_[t] = 0;
    }

    bool try_candidate(std::size_t depth, Vertex x, Vertex t) {
        if (!admissible(x, t) || !consistent(depth, x, t)) return false;
        assign(x, t);
        bool stop = extend(depth + 1);
        unassign(x, t);
        return stop;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return !visit_(map_);
        const Vertex x = order_[depth];
        if (anchor_[depth] >= 0) {
            for (Vertex t : target_.neighbors(map_[anchor_[depth]]))
                if (try_candidate(depth, x, t)) return true;
        } else {
            for (Vertex t = 0; t < target_.order(); ++t)
                if (try_candidate(depth, x, t)) return true;
        }
        return false;
    }

    const Graph& target_;
    const Graph& pattern_;
    const EmbedOptions& options_;
    const std::function<bool(const Embedding&)>& visit_;
    std::vector<Vertex> order_;
    std::vector<Vertex> anchor_;
    Embedding map_;
    std::vector<char> used_;
};

} // namespace

bool for_each_induced_embedding(const Graph& target, const Graph& pattern,
                                const EmbedOptions& options,
                                const std::function<bool(const Embedding&)>& visit) {
    if (options.must_contain) target.check_vertex(*options.must_contain);
    return Search(target, pattern, options, visit).run();
}

std::optional<Embedding> find_induced_embedding(const Graph& target, const Graph& pattern,
                                                const EmbedOptions& options) {
    std::optional<Embedding> found;
    for_each_induced_embedding(target, pattern, options, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

} // namespace augmis
