#pragma once

#include "augmis/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace augmis {

using Code = std::vector<std::uint8_t>;

/// Largest order the canonical labeller accepts (one machine word per row).
inline constexpr int kMaxCanonOrder = 64;

struct CanonicalForm {
    /// Byte 0: order n. Byte 1: 1 when coloured. Then, when coloured, the
    /// colour bits in canonical order packed LSB-first, then the upper
    /// triangle of the canonical adjacency matrix packed LSB-first (row-major).
    Code code;
    /// labeling[v] is the canonical position of vertex v.
    std::vector<Vertex> labeling;
};

/// Canonical form of g under colour-preserving relabelling. `colors` is
/// either empty (uncoloured) or holds one 0/1 colour per vertex.
///
/// Leaves of an individualisation-refinement search tree are compared by
/// adjacency code and the least is kept; automorphisms discovered along the
/// way prune sibling subtrees in the same orbit.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

/// Decodes a code back into a graph (in canonical labelling) and its colours
/// (empty when uncoloured).
struct DecodedCode {
    Graph graph;
    std::vector<int> colors;
};
DecodedCode decode_code(std::span<const std::uint8_t> code);

std::string to_hex(std::span<const std::uint8_t> code);
Code from_hex(std::string_view hex);

} // namespace augmis
