#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nulltree/tree.hpp"

namespace nulltree {

/// One S-part or N-part. supp/core are host labels (empty for N-parts).
struct Part {
    Component component;
    std::vector<Vertex> supp;
    std::vector<Vertex> core;

    const std::vector<Vertex>& vertices() const { return component.labels; }
};

/// Null decomposition of a tree: support, core, the S-forest (components
/// induced by N[Supp]), the N-forest (components of the remainder) and the
/// connection edges joining the two.
struct Decomposition {
    int order = 0;
    std::vector<Vertex> supp;
    std::vector<Vertex> core;
    std::vector<Vertex> n_vertices;
    std::vector<Part> s_parts;
    std::vector<Part> n_parts;
    std::vector<Edge> connection_edges;

    bool is_connection_edge(const Edge& e) const;
    bool in_supp(Vertex v) const;
    bool in_core(Vertex v) const;

    /// Index into s_parts / n_parts of the part containing v.
    std::optional<std::size_t> s_part_of(Vertex v) const;
    std::optional<std::size_t> n_part_of(Vertex v) const;
};

Decomposition decompose(const Tree& t);

/// N[Supp(T)] == V(T).
bool is_s_tree(const Tree& t);

/// T(e,u,v) = T - e + {u,v}, for a connection edge e of d, u in the core of
/// the S-part touched by e and v in the N-part touched by e.
Tree rewire(const Tree& t, const Decomposition& d, const Edge& e, Vertex u, Vertex v);

/// Graphviz rendering. With a decomposition, supported vertices get
/// class=supp (filled), core vertices class=core, N-forest vertices
/// class=nvert, and connection edges are dashed. Vertices ascending, edges
/// lexicographic.
std::string to_dot(const Tree& t, const Decomposition* d = nullptr);

}  // namespace nulltree
