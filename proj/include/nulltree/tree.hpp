#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nulltree {

/// Vertex labels are 1-based everywhere in the public interface.
using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable labeled tree on the vertices 1..n.
///
/// Construction validates the tree property; every other operation in the
/// library may therefore assume connectivity and acyclicity.
class Tree {
public:
    /// Throws NotATree on self-loops, duplicate edges, labels outside 1..n,
    /// a wrong edge count, or disconnection.
    Tree(int n, std::vector<Edge> edges);

    static Tree single_vertex() { return Tree(1, {}); }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Ascending neighbor list of v.
    std::span<const Vertex> neighbors(Vertex v) const;

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool contains(Vertex v) const { return v >= 1 && v <= n_; }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    /// Throws InvalidVertex unless v is a label of this tree.
    void require_vertex(Vertex v) const;

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;  // index 0 unused
};

/// Connected piece of a larger tree, relabeled to 1..k.
///
/// Local vertex i corresponds to labels[i-1] in the host tree; labels are
/// ascending, so local order agrees with host order.
struct Component {
    Tree tree;
    std::vector<Vertex> labels;

    Vertex original(Vertex local) const { return labels.at(static_cast<std::size_t>(local - 1)); }
    std::optional<Vertex> local(Vertex original) const;
    bool contains_original(Vertex original) const { return local(original).has_value(); }

    /// Host-labeled edges of the component.
    std::vector<Edge> original_edges() const;
};

struct Forest {
    std::vector<Component> components;

    std::size_t order() const;
};

/// Components of the subgraph of T induced by the vertices with keep[v]
/// set (keep is indexed by label, entry 0 ignored). Ordered by smallest
/// host label.
std::vector<Component> induced_components(const Tree& t, const std::vector<bool>& keep);

/// Parses the edge-list format: first non-comment line is n, then one
/// "u v" line per edge. Lines starting with '#' and blank lines are skipped.
Tree parse_tree(std::string_view text);

/// Inverse of parse_tree (no comments, trailing newline).
std::string format_tree(const Tree& t);

/// Decodes a Prüfer sequence (entries in 1..n, length n-2) into a tree.
Tree tree_from_pruefer(int n, std::span<const Vertex> sequence);

/// Uniform labeled tree: a Prüfer sequence drawn from std::mt19937_64
/// seeded with `seed`, entries via std::uniform_int_distribution<int>(1, n).
Tree random_tree(int n, std::uint64_t seed);

/// {x : the u-x path passes through v}, ascending. Requires u != v.
std::vector<Vertex> branch(const Tree& t, Vertex u, Vertex v);

/// S + {c, new_label}. new_label must be order()+1.
Tree attach_pendant(const Tree& s, Vertex c, Vertex new_label);

/// T - removed + added, validated to still be a tree.
Tree replace_edge(const Tree& t, const Edge& removed, const Edge& added);

/// Components of T - v ordered by smallest label; empty for a single vertex.
Forest delete_vertex(const Tree& t, Vertex v);

/// Path on 1..n, star with center 1 on 1..n.
Tree path_tree(int n);
Tree star_tree(int n);

}  // namespace nulltree
