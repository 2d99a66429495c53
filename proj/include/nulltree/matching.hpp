#pragma once

#include <optional>
#include <vector>

#include "nulltree/decomposition.hpp"
#include "nulltree/linalg.hpp"
#include "nulltree/tree.hpp"

namespace nulltree {

/// Set of pairwise disjoint tree edges, kept sorted.
class Matching {
public:
    Matching() = default;

    /// Throws InvalidMatching if an edge is missing from t or two edges
    /// share a vertex.
    Matching(const Tree& t, std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool contains(const Edge& e) const;

    /// Partner of v, if v is saturated.
    std::optional<Vertex> mate(Vertex v) const;
    bool saturates(Vertex v) const { return mate(v).has_value(); }

    /// V(M), ascending.
    std::vector<Vertex> saturated() const;

    friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }
    friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges_ <=> b.edges_; }

private:
    std::vector<Edge> edges_;
};

struct CountResult {
    int optimum = 0;
    Integer count;
};

/// Leaf-peeling greedy: repeatedly match the smallest-labeled leaf to its
/// neighbor. Optimal on trees.
Matching maximum_matching(const Tree& t);

/// nu(T).
int matching_number(const Tree& t);

/// nu(T - v), i.e. the matching number of the forest left after removing v.
int matching_number_without(const Tree& t, Vertex v);

/// Matching number of the forest left after removing every vertex in `removed`.
int matching_number_without(const Tree& t, std::span<const Vertex> removed);

/// (nu(T), m(T)) by a matched/unmatched-root subtree DP.
CountResult matching_count(const Tree& t);

/// Every maximum matching, sorted. Throws Truncated if there are more
/// than `limit`.
std::vector<Matching> enumerate_maximum_matchings(const Tree& t, std::size_t limit);

struct IndependenceResult {
    int alpha = 0;
    Integer count;
    std::vector<Vertex> witness;  // lexicographically smallest maximum set
};
IndependenceResult independence(const Tree& t);

struct VertexCoverResult {
    int tau = 0;
    Integer count;
    std::vector<Vertex> witness;  // complement of the independence witness
};
VertexCoverResult minimum_vertex_cover(const Tree& t);

/// Vertices missed by at least one maximum matching, found as
/// {v : nu(T - v) == nu(T)}.
std::vector<Vertex> edmond_gallai(const Tree& t);

/// Maximum matching of S-tree s that misses v, obtained by flipping M
/// along an alternating path from v (the smallest admissible label is
/// taken at every choice).
Matching desaturate(const Tree& s, const Matching& m, Vertex v);

/// Trades the connection edge e out of m for an alternating path through
/// the S-part that e touches. Same size, one connection edge fewer.
Matching reroute_connection_edge(const Tree& t, const Decomposition& d, const Matching& m, const Edge& e);

/// Returns the first core subset U (in bitmask order) with
/// |N(U) ∩ Supp(S)| <= |U|, or nullopt if Hall's condition holds for all.
std::optional<std::vector<Vertex>> hall_check(const Tree& s, const Decomposition& d);
inline constexpr std::size_t kHallMaxCore = 20;

/// Matching of size core(S) pairing each core vertex with a supported
/// neighbor (augmenting paths, core ascending).
Matching core_saturating_matching(const Tree& s, const Decomposition& d);

/// gamma(T) by exhaustive search over vertex subsets in increasing size.
int domination_number_bruteforce(const Tree& t);
inline constexpr int kDominationMaxOrder = 24;

}  // namespace nulltree
