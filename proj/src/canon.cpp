#include "augmis/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace augmis {
namespace {

using Mask = std::uint64_t;
using Partition = std::vector<Mask>;

inline Mask bit(int v) { return Mask{1} << v; }

class Canonizer {
public:
    Canonizer(const Graph& g, std::span<const int> colors) : n_(g.order()), adj_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
        colored_ = !colors.empty();
        Mask c0 = 0, c1 = 0;
        for (Vertex v = 0; v < n_; ++v) (colored_ && colors[v] ? c1 : c0) |= bit(v);
        black_ = c1;
        if (c0) root_.push_back(c0);
        if (c1) root_.push_back(c1);
        code_bytes_ = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    }

    CanonicalForm run() {
        std::vector<int> prefix;
        search(root_, prefix);
        CanonicalForm out;
        out.labeling = best_lab_;
        out.code.push_back(static_cast<std::uint8_t>(n_));
        out.code.push_back(colored_ ? 1 : 0);
        if (colored_) {
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_));
            // Cells are ordered with colour 0 first, so colours ascend.
            std::vector<Vertex> inv(static_cast<std::size_t>(n_));
            for (Vertex v = 0; v < n_; ++v) inv[best_lab_[v]] = v;
            for (int i = 0; i < n_; ++i) bits[i] = (black_ & bit(inv[i])) ? 1 : 0;
            pack(bits, out.code);
        }
        pack(best_code_, out.code);
        return out;
    }

private:
    static void pack(const std::vector<std::uint8_t>& bits, Code& out) {
        std::uint8_t acc = 0;
        int used = 0;
        for (std::uint8_t b : bits) {
            acc |= static_cast<std::uint8_t>(b << used);
            if (++used == 8) {
                out.push_back(acc);
                acc = 0;
                used = 0;
            }
        }
        if (used) out.push_back(acc);
    }

    void refine(Partition& p) const {
        bool changed = true;
        std::vector<std::pair<std::vector<int>, int>> sig;
        while (changed) {
            changed = false;
            Partition next;
            next.reserve(static_cast<std::size_t>(n_));
            for (Mask cell : p) {
                if (std::popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                sig.clear();
                for (Mask rest = cell; rest; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    std::vector<int> counts(p.size());
                    for (std::size_t c = 0; c < p.size(); ++c) counts[c] = std::popcount(adj_[v] & p[c]);
                    sig.emplace_back(std::move(counts), v);
                }
                std::sort(sig.begin(), sig.end());
                Mask current = 0;
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i > 0 && sig[i].first != sig[i - 1].first) {
                        next.push_back(current);
                        current = 0;
                        changed = true;
                    }
                    current |= bit(sig[i].second);
                }
                next.push_back(current);
            }
            p = std::move(next);
        }
    }

    void leaf(const Partition& p) {
        std::vector<Vertex> lab(static_cast<std::size_t>(n_)), inv(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = std::countr_zero(p[i]);
            lab[v] = static_cast<Vertex>(i);
            inv[i] = v;
        }
        std::vector<std::uint8_t> code;
        code.reserve(code_bytes_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) code.push_back((adj_[inv[i]] >> inv[j]) & 1U);
        if (best_lab_.empty() || code < best_code_) {
            best_code_ = std::move(code);
            best_lab_ = std::move(lab);
            best_inv_ = std::move(inv);
        } else if (code == best_code_) {
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            for (Vertex v = 0; v < n_; ++v) gamma[v] = best_inv_[lab[v]];
            bool identity = true;
            for (Vertex v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
            if (!identity) automorphisms_.push_back(std::move(gamma));
        }
    }

    // Orbit representative of v under the stored automorphisms that fix
    // every vertex of prefix.
    std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (Vertex v = 0; v < n_; ++v) {
                int a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    void search(Partition p, std::vector<int>& prefix) {
        refine(p);
        if (static_cast<int>(p.size()) == n_) {
            leaf(p);
            return;
        }
        std::size_t target = p.size();
        for (std::size_t i = 0; i < p.size(); ++i) {
            int size = std::popcount(p[i]);
            if (size > 1 && (target == p.size() || size < std::popcount(p[target]))) target = i;
        }
        std::vector<int> done;
        for (Mask rest = p[target]; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (!done.empty()) {
                auto orbit = stabilizer_orbits(prefix);
                bool seen = std::any_of(done.begin(), done.end(), [&](int w) { return orbit[w] == orbit[v]; });
                if (seen) continue;
            }
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i == target) {
                    child.push_back(bit(v));
                    child.push_back(p[i] & ~bit(v));
                } else {
                    child.push_back(p[i]);
                }
            }
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
            done.push_back(v);
        }
    }

    int n_;
    std::vector<Mask> adj_;
    bool colored_ = false;
    Mask black_ = 0;
    Partition root_;
    std::size_t code_bytes_ = 0;
    std::vector<std::uint8_t> best_code_;
    std::vector<Vertex> best_lab_, best_inv_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
    if (g.order() > kMaxCanonOrder)
        throw std::invalid_argument("canonical labelling supports at most 64 vertices");
    if (!colors.empty()) {
        if (static_cast<int>(colors.size()) != g.order())
            throw std::invalid_argument("colour vector length differs from graph order");
        for (int c : colors)
            if (c != 0 && c != 1) throw std::invalid_argument("colours must be 0 or 1");
    }
    if (g.order() == 0) {
        CanonicalForm out;
        out.code = {0, static_cast<std::uint8_t>(colors.empty() ? 0 : 1)};
        return out;
    }
    return Canonizer(g, colors).run();
}

DecodedCode decode_code(std::span<const std::uint8_t> code) {
    if (code.size() < 2) throw std::invalid_argument("code too short");
    const int n = code[0];
    const bool colored = code[1] != 0;
    std::size_t pos = 2;
    auto read_bits = [&](std::size_t count) {
        std::vector<int> bits(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t byte = pos + i / 8;
            if (byte >= code.size()) throw std::invalid_argument("code truncated");
            bits[i] = (code[byte] >> (i % 8)) & 1;
        }
        pos += (count + 7) / 8;
        return bits;
    };
    DecodedCode out;
    if (colored) out.colors = read_bits(static_cast<std::size_t>(n));
    auto adj = read_bits(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    if (pos != code.size()) throw std::invalid_argument("code has trailing bytes");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[k++]) edges.emplace_back(i, j);
    out.graph = Graph(n, edges);
    return out;
}

std::string to_hex(std::span<const std::uint8_t> code) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (std::uint8_t b : code) {
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

Code from_hex(std::string_view hex) {
    if (hex.size() % 2) throw std::invalid_argument("odd-length hex string");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    Code out;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return out;
}

} // namespace augmis
