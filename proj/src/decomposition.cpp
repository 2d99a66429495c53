#include "nulltree/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "nulltree/errors.hpp"
#include "nulltree/linalg.hpp"

namespace nulltree {

namespace {

bool sorted_contains(const std::vector<Vertex>& set, Vertex v) {
    return std::binary_search(set.begin(), set.end(), v);
}

std::optional<std::size_t> part_of(const std::vector<Part>& parts, Vertex v) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].component.contains_original(v)) {
            return i;
        }
    }
    return std::nullopt;
}

}  // namespace

bool Decomposition::is_connection_edge(const Edge& e) const {
    return std::binary_search(connection_edges.begin(), connection_edges.end(), e);
}

bool Decomposition::in_supp(Vertex v) const { return sorted_contains(supp, v); }
bool Decomposition::in_core(Vertex v) const { return sorted_contains(core, v); }

std::optional<std::size_t> Decomposition::s_part_of(Vertex v) const { return part_of(s_parts, v); }
std::optional<std::size_t> Decomposition::n_part_of(Vertex v) const { return part_of(n_parts, v); }

Decomposition decompose(const Tree& t) {
    const auto n = static_cast<std::size_t>(t.order());
    Decomposition d;
    d.order = t.order();
    d.supp = null_support(t);

    std::vector<bool> in_supp(n + 1, false);
    std::vector<bool> closed(n + 1, false);
    for (Vertex v : d.supp) {
        in_supp[static_cast<std::size_t>(v)] = true;
        closed[static_cast<std::size_t>(v)] = true;
    }
    // core = N(supp), computed as a neighborhood rather than as
    // N[supp] \ supp so that a non-independent support would show up.
    std::vector<bool> in_core(n + 1, false);
    for (Vertex v : d.supp) {
        for (Vertex w : t.neighbors(v)) {
            in_core[static_cast<std::size_t>(w)] = true;
            closed[static_cast<std::size_t>(w)] = true;
        }
    }
    std::vector<bool> rest(n + 1, false);
    for (Vertex v = 1; v <= t.order(); ++v) {
        if (in_core[static_cast<std::size_t>(v)]) {
            d.core.push_back(v);
        }
        if (!closed[static_cast<std::size_t>(v)]) {
            rest[static_cast<std::size_t>(v)] = true;
            d.n_vertices.push_back(v);
        }
    }

    for (auto& comp : induced_components(t, closed)) {
        Part part{std::move(comp), {}, {}};
        for (Vertex v : part.component.labels) {
            if (in_supp[static_cast<std::size_t>(v)]) {
                part.supp.push_back(v);
            }
            if (in_core[static_cast<std::size_t>(v)]) {
                part.core.push_back(v);
            }
        }
        d.s_parts.push_back(std::move(part));
    }
    for (auto& comp : induced_components(t, rest)) {
        d.n_parts.push_back(Part{std::move(comp), {}, {}});
    }
    for (const Edge& e : t.edges()) {
        if (closed[static_cast<std::size_t>(e.u)] != closed[static_cast<std::size_t>(e.v)]) {
            d.connection_edges.push_back(e);
        }
    }
    return d;
}

bool is_s_tree(const Tree& t) {
    std::vector<bool> covered(static_cast<std::size_t>(t.order()) + 1, false);
    for (Vertex v : null_support(t)) {
        covered[static_cast<std::size_t>(v)] = true;
        for (Vertex w : t.neighbors(v)) {
            covered[static_cast<std::size_t>(w)] = true;
        }
    }
    return std::all_of(covered.begin() + 1, covered.end(), [](bool b) { return b; });
}

Tree rewire(const Tree& t, const Decomposition& d, const Edge& e, Vertex u, Vertex v) {
    auto describe = [](const Edge& x) {
        return "{" + std::to_string(x.u) + "," + std::to_string(x.v) + "}";
    };
    if (!d.is_connection_edge(e) || !t.has_edge(e)) {
        throw NotConnectionEdge(describe(e) + " is not a connection edge");
    }
    const Vertex core_end = d.in_core(e.u) ? e.u : e.v;
    const Vertex n_end = e.other(core_end);
    const auto s_index = d.s_part_of(core_end);
    const auto n_index = d.n_part_of(n_end);
    if (!s_index || !n_index) {
        throw NotConnectionEdge(describe(e) + " does not join an S-part to an N-part");
    }
    const Part& s_part = d.s_parts[*s_index];
    const Part& n_part = d.n_parts[*n_index];
    if (!sorted_contains(s_part.core, u)) {
        throw EndpointOutsidePart("vertex " + std::to_string(u) + " is not a core vertex of the S-part of " +
                                  describe(e));
    }
    if (!n_part.component.contains_original(v)) {
        throw EndpointOutsidePart("vertex " + std::to_string(v) + " is not in the N-part of " + describe(e));
    }
    return replace_edge(t, e, Edge(u, v));
}

std::string to_dot(const Tree& t, const Decomposition* d) {
    std::ostringstream os;
    os << "graph T {\n";
    for (Vertex v = 1; v <= t.order(); ++v) {
        os << "  " << v;
        if (d != nullptr) {
            if (d->in_supp(v)) {
                os << " [class=supp, style=filled]";
            } else if (d->in_core(v)) {
                os << " [class=core]";
            } else {
                os << " [class=nvert]";
            }
        }
        os << ";\n";
    }
    for (const Edge& e : t.edges()) {
        os << "  " << e.u << " -- " << e.v;
        if (d != nullptr && d->is_connection_edge(e)) {
            os << " [style=dashed]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace nulltree
