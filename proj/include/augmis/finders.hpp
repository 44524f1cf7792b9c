#pragma once

#include "augmis/graph.hpp"
#include "augmis/irreducible.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace augmis {

enum class Shape { Path, TreeExtension, Catalog };

const char* shape_name(Shape s);

/// The simple tree and extension sets behind a tree-extension candidate:
/// centre u, middle vertices A0 = {a_i}, leaves B0 = {b_i} (b_i picked from
/// L_i), and the extra white/black sets Q1, Q2.
struct TreeExtension {
    Vertex center = -1;
    std::vector<Vertex> middles;
    std::vector<Vertex> leaves;
    VertexSet extra_white;
    VertexSet extra_black;
    /// candidates[i] is L_i, the admissible leaves for middles[i].
    std::vector<VertexSet> candidates;
};

/// Proposed swap: remove `white` (⊆ S) from S and add `black` (⊆ R).
struct AugCandidate {
    VertexSet white;
    VertexSet black;
    Shape shape = Shape::Path;
    std::optional<TreeExtension> tree;
    /// Index into the catalog entries for catalog hits.
    int catalog_entry = -1;
};

/// Raised when the inputs of is_augmenting break its preconditions, as
/// opposed to a candidate that is simply not augmenting.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// B independent, |B| > |W| and N(B) ∩ S ⊆ W. Throws PreconditionError when S
/// is not independent, W ⊄ S or B meets S.
bool is_augmenting(const Graph& g, const VertexSet& s, const AugCandidate& cand);

/// Exact search for a chordless alternating path b0 w1 b1 ... wk bk with black
/// ends, whites in S and every black's S-neighbours on the path (k = 0 is a
/// single black vertex with no S-neighbour). Paths are grown from an end
/// black, one white/black pair at a time, in ascending id order.
///
/// max_len bounds the number of edges; unset means exhaustive.
std::optional<AugCandidate> find_augmenting_path(const Graph& g, const VertexSet& s,
                                                 std::optional<int> max_len = std::nullopt);

struct TreeSearchResult {
    std::optional<AugCandidate> candidate;
    /// Adjacent leaf pairs (b_i, b_j) met while assembling B0. Impossible on
    /// S(1,1,3)-free inputs; each one is reported and its triple skipped.
    std::vector<Edge> class_violations;
};

/// Triples (Q1 ⊆ S, Q2 ⊆ R, u ∈ R \ Q2) with |Q1| = |Q2| <= 2p, Q2 independent
/// and N(u) ∩ Q2 = ∅ are tried in the order |Q1|, Q1, Q2, u (lexicographic).
/// For each: A0 = N_S(u) \ Q1 needs k = |A0| >= p + 2 and N_S(Q2) ⊆ A0 ∪ Q1;
/// every L_i = { v ∈ R \ (Q2 ∪ {u}) : N_{S\Q1}(v) = {a_i}, v has no neighbour
/// in {u} ∪ Q2 } must be nonempty; b_i = min L_i. The first success yields
/// W = A0 ∪ Q1, B = {u} ∪ B0 ∪ Q2. Throws std::invalid_argument if p < 2.
TreeSearchResult find_tree_extension(const Graph& g, const VertexSet& s, int p);

/// Tries catalog entries in order and returns the first induced embedding
/// with whites in S, blacks in R, and every embedded black's S-neighbours
/// inside the embedded whites.
std::optional<AugCandidate> find_from_catalog(const Graph& g, const VertexSet& s, const Catalog& cat);

} // namespace augmis
