#include "nulltree/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>

#include "nulltree/errors.hpp"

namespace nulltree {

namespace {

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Greedy leaf peeling restricted to the vertices with alive[v] set.
std::vector<Edge> peel_leaves(const Tree& t, std::vector<bool> alive) {
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<int> deg(n + 1, 0);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 1; v <= t.order(); ++v) {
        if (!alive[static_cast<std::size_t>(v)]) {
            continue;
        }
        for (Vertex w : t.neighbors(v)) {
            if (alive[static_cast<std::size_t>(w)]) {
                ++deg[static_cast<std::size_t>(v)];
            }
        }
        if (deg[static_cast<std::size_t>(v)] <= 1) {
            leaves.push(v);
        }
    }
    auto remove = [&](Vertex x) {
        alive[static_cast<std::size_t>(x)] = false;
        for (Vertex y : t.neighbors(x)) {
            if (alive[static_cast<std::size_t>(y)] && --deg[static_cast<std::size_t>(y)] <= 1) {
                leaves.push(y);
            }
        }
    };

    std::vector<Edge> out;
    while (!leaves.empty()) {
        Vertex v = leaves.top();
        leaves.pop();
        if (!alive[static_cast<std::size_t>(v)]) {
            continue;
        }
        if (deg[static_cast<std::size_t>(v)] == 0) {
            alive[static_cast<std::size_t>(v)] = false;
            continue;
        }
        Vertex u = 0;
        for (Vertex w : t.neighbors(v)) {
            if (alive[static_cast<std::size_t>(w)]) {
                u = w;
                break;
            }
        }
        out.emplace_back(v, u);
        remove(v);
        remove(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Vertices in BFS order from 1 together with parent pointers (parent of 1 is 0).
struct Rooted {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

Rooted root_at_one(const Tree& t) {
    Rooted r;
    r.parent.assign(static_cast<std::size_t>(t.order()) + 1, 0);
    r.order.reserve(static_cast<std::size_t>(t.order()));
    r.order.push_back(1);
    std::vector<bool> seen(static_cast<std::size_t>(t.order()) + 1, false);
    seen[1] = true;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
        Vertex x = r.order[i];
        for (Vertex y : t.neighbors(x)) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                r.parent[static_cast<std::size_t>(y)] = x;
                r.order.push_back(y);
            }
        }
    }
    return r;
}

// (optimum, count) with "better size wins, ties add counts".
struct Best {
    int size = -1;
    Integer count = 0;

    bool valid() const { return size >= 0; }
    void merge(int s, const Integer& c) {
        if (s > size) {
            size = s;
            count = c;
        } else if (s == size) {
            count += c;
        }
    }
    void merge(const Best& other) {
        if (other.valid()) {
            merge(other.size, other.count);
        }
    }
};

enum class Force { Free, In, Out };

// Maximum independent set size and count under per-vertex constraints.
Best independence_dp(const Tree& t, const Rooted& r, const std::vector<Force>& force) {
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<Best> inc(n + 1);
    std::vector<Best> exc(n + 1);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        Best in{1, 1};
        Best out{0, 1};
        for (Vertex c : t.neighbors(*it)) {
            if (c == r.parent[v]) {
                continue;
            }
            const auto ci = static_cast<std::size_t>(c);
            if (in.valid()) {
                if (exc[ci].valid()) {
                    in.size += exc[ci].size;
                    in.count *= exc[ci].count;
                } else {
                    in = Best{};
                }
            }
            Best child;
            child.merge(inc[ci]);
            child.merge(exc[ci]);
            out.size += child.size;
            out.count *= child.count;
        }
        inc[v] = force[v] == Force::Out ? Best{} : in;
        exc[v] = force[v] == Force::In ? Best{} : out;
    }
    Best root;
    root.merge(inc[1]);
    root.merge(exc[1]);
    return root;
}

Matching checked_matching(const Tree& t, const Matching& m) {
    // Re-validates against t in case m was built for another tree.
    return Matching(t, m.edges());
}

}  // namespace

Matching::Matching(const Tree& t, std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    std::vector<bool> used(static_cast<std::size_t>(t.order()) + 1, false);
    for (const Edge& e : edges_) {
        if (!t.has_edge(e)) {
            throw InvalidMatching(edge_str(e) + " is not an edge of the tree");
        }
        for (Vertex x : {e.u, e.v}) {
            if (used[static_cast<std::size_t>(x)]) {
                throw InvalidMatching("vertex " + std::to_string(x) + " is covered twice");
            }
            used[static_cast<std::size_t>(x)] = true;
        }
    }
}

bool Matching::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<Vertex> Matching::mate(Vertex v) const {
    for (const Edge& e : edges_) {
        if (e.contains(v)) {
            return e.other(v);
        }
    }
    return std::nullopt;
}

std::vector<Vertex> Matching::saturated() const {
    std::vector<Vertex> out;
    for (const Edge& e : edges_) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matching maximum_matching(const Tree& t) {
    return Matching(t, peel_leaves(t, std::vector<bool>(static_cast<std::size_t>(t.order()) + 1, true)));
}

int matching_number(const Tree& t) {
    return static_cast<int>(peel_leaves(t, std::vector<bool>(static_cast<std::size_t>(t.order()) + 1, true)).size());
}

int matching_number_without(const Tree& t, Vertex v) {
    t.require_vertex(v);
    std::vector<bool> alive(static_cast<std::size_t>(t.order()) + 1, true);
    alive[static_cast<std::size_t>(v)] = false;
    return static_cast<int>(peel_leaves(t, std::move(alive)).size());
}

int matching_number_without(const Tree& t, std::span<const Vertex> removed) {
    std::vector<bool> alive(static_cast<std::size_t>(t.order()) + 1, true);
    for (Vertex v : removed) {
        t.require_vertex(v);
        alive[static_cast<std::size_t>(v)] = false;
    }
    return static_cast<int>(peel_leaves(t, std::move(alive)).size());
}

CountResult matching_count(const Tree& t) {
    const Rooted r = root_at_one(t);
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<Best> free(n + 1);     // root of the subtree left unmatched
    std::vector<Best> matched(n + 1);  // root matched to one of its children
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        std::vector<std::pair<std::size_t, Best>> children;
        Best unm{0, 1};
        for (Vertex c : t.neighbors(*it)) {
            if (c == r.parent[v]) {
                continue;
            }
            const auto ci = static_cast<std::size_t>(c);
            Best best = free[ci];
            best.merge(matched[ci]);
            unm.size += best.size;
            unm.count *= best.count;
            children.emplace_back(ci, std::move(best));
        }
        Best mat;
        for (const auto& [ci, best] : children) {
            // Swap child ci's best contribution for "ci unmatched" plus the edge to v.
            const int size = unm.size - best.size + free[ci].size + 1;
            const Integer count = unm.count / best.count * free[ci].count;
            mat.merge(size, count);
        }
        free[v] = std::move(unm);
        matched[v] = std::move(mat);
    }
    Best root = free[1];
    root.merge(matched[1]);
    return CountResult{root.size, root.count};
}

std::vector<Matching> enumerate_maximum_matchings(const Tree& t, std::size_t limit) {
    const int n = t.order();
    const int nu = matching_number(t);
    const int slack = n - 2 * nu;  // vertices every maximum matching leaves bare

    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<Edge> current;
    std::vector<Matching> out;

    std::function<void(Vertex, int)> visit = [&](Vertex v, int bare) {
        while (v <= n && used[static_cast<std::size_t>(v)]) {
            ++v;
        }
        if (v > n) {
            if (out.size() == limit) {
                throw Truncated("more than " + std::to_string(limit) + " maximum matchings");
            }
            out.emplace_back(t, current);
            return;
        }
        used[static_cast<std::size_t>(v)] = true;
        for (Vertex w : t.neighbors(v)) {
            if (w > v && !used[static_cast<std::size_t>(w)]) {
                used[static_cast<std::size_t>(w)] = true;
                current.emplace_back(v, w);
                visit(v + 1, bare);
                current.pop_back();
                used[static_cast<std::size_t>(w)] = false;
            }
        }
        if (bare < slack) {
            visit(v + 1, bare + 1);
        }
        used[static_cast<std::size_t>(v)] = false;
    };
    visit(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

IndependenceResult independence(const Tree& t) {
    const Rooted r = root_at_one(t);
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<Force> force(n + 1, Force::Free);
    const Best best = independence_dp(t, r, force);

    IndependenceResult result{best.size, best.count, {}};
    for (Vertex v = 1; v <= t.order(); ++v) {
        force[static_cast<std::size_t>(v)] = Force::In;
        const Best constrained = independence_dp(t, r, force);
        if (constrained.valid() && constrained.size == best.size) {
            result.witness.push_back(v);
        } else {
            force[static_cast<std::size_t>(v)] = Force::Out;
        }
    }
    return result;
}

VertexCoverResult minimum_vertex_cover(const Tree& t) {
    IndependenceResult ind = independence(t);
    VertexCoverResult result{t.order() - ind.alpha, ind.count, {}};
    for (Vertex v = 1; v <= t.order(); ++v) {
        if (!std::binary_search(ind.witness.begin(), ind.witness.end(), v)) {
            result.witness.push_back(v);
        }
    }
    return result;
}

std::vector<Vertex> edmond_gallai(const Tree& t) {
    const int nu = matching_number(t);
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= t.order(); ++v) {
        if (matching_number_without(t, v) == nu) {
            out.push_back(v);
        }
    }
    return out;
}

Matching desaturate(const Tree& s, const Matching& m_in, Vertex v) {
    s.require_vertex(v);
    if (!is_s_tree(s)) {
        throw NotSTree("desaturate needs an S-tree");
    }
    const Matching m = checked_matching(s, m_in);
    if (m.size() != matching_number(s)) {
        throw NotMaximum("matching has " + std::to_string(m.size()) + " edges, nu = " +
                         std::to_string(matching_number(s)));
    }
    const std::vector<Vertex> supp = null_support(s);
    auto supported = [&](Vertex x) { return std::binary_search(supp.begin(), supp.end(), x); };
    if (!supported(v)) {
        throw VertexNotSupported("vertex " + std::to_string(v) + " is not supported");
    }
    if (!m.saturates(v)) {
        throw VertexUnsaturated("vertex " + std::to_string(v) + " is not saturated");
    }

    std::vector<Vertex> path{v};
    Vertex u = v;
    while (m.saturates(u)) {
        if (static_cast<int>(path.size()) > s.order()) {
            throw std::logic_error("desaturater path did not terminate");
        }
        const Vertex c = *m.mate(u);
        std::optional<Vertex> next;
        for (Vertex w : s.neighbors(c)) {
            if (supported(w) && !m.saturates(w)) {
                next = w;
                break;
            }
        }
        if (!next) {
            for (Vertex w : s.neighbors(c)) {
                if (supported(w) && w != u) {
                    next = w;
                    break;
                }
            }
        }
        if (!next) {
            throw std::logic_error("core vertex " + std::to_string(c) + " has a single supported neighbor");
        }
        u = *next;
        path.push_back(c);
        path.push_back(u);
    }

    std::vector<Edge> edges = m.edges();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Edge e(path[i], path[i + 1]);
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it != edges.end()) {
            edges.erase(it);
        } else {
            edges.push_back(e);
        }
    }
    return Matching(s, std::move(edges));
}

Matching reroute_connection_edge(const Tree& t, const Decomposition& d, const Matching& m_in, const Edge& e) {
    const Matching m = checked_matching(t, m_in);
    if (!d.is_connection_edge(e)) {
        throw NotConnectionEdge(edge_str(e) + " is not a connection edge");
    }
    if (!m.contains(e)) {
        throw EdgeNotInMatching(edge_str(e) + " is not in the matching");
    }
    const Vertex start = d.in_core(e.u) ? e.u : e.v;
    const auto part = d.s_part_of(start);
    if (!part) {
        throw NotConnectionEdge(edge_str(e) + " does not touch an S-part");
    }
    const Component& s = d.s_parts[*part].component;

    // Depth-first search, smallest labels first, for an alternating path
    // start - w1 = u1 - w2 = u2 ... - wk through the S-part ending at a
    // vertex wk left bare by m. Hall's condition on the S-part guarantees
    // one exists.
    std::vector<bool> visited(static_cast<std::size_t>(t.order()) + 1, false);
    std::vector<Vertex> path{start};
    visited[static_cast<std::size_t>(start)] = true;
    std::function<bool(Vertex)> extend = [&](Vertex u) {
        for (Vertex w : t.neighbors(u)) {
            if (!s.contains_original(w) || visited[static_cast<std::size_t>(w)]) {
                continue;
            }
            const auto mate = m.mate(w);
            if (!mate) {
                path.push_back(w);
                return true;
            }
            if (!s.contains_original(*mate) || visited[static_cast<std::size_t>(*mate)]) {
                continue;
            }
            visited[static_cast<std::size_t>(w)] = true;
            visited[static_cast<std::size_t>(*mate)] = true;
            path.push_back(w);
            path.push_back(*mate);
            if (extend(*mate)) {
                return true;
            }
            path.pop_back();
            path.pop_back();
        }
        return false;
    };
    if (!extend(start)) {
        throw std::logic_error("no alternating path out of " + std::to_string(start) + " inside its S-part");
    }

    std::vector<Edge> edges;
    for (const Edge& x : m.edges()) {
        if (x != e) {
            edges.push_back(x);
        }
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Edge x(path[i], path[i + 1]);
        auto it = std::find(edges.begin(), edges.end(), x);
        if (it != edges.end()) {
            edges.erase(it);
        } else {
            edges.push_back(x);
        }
    }
    return Matching(t, std::move(edges));
}

std::optional<std::vector<Vertex>> hall_check(const Tree& s, const Decomposition& d) {
    if (d.order != s.order()) {
        throw DimensionMismatch("decomposition does not belong to this tree");
    }
    if (!is_s_tree(s)) {
        throw NotSTree("Hall's condition is only asserted for S-trees");
    }
    const std::vector<Vertex>& core = d.core;
    if (core.size() > kHallMaxCore) {
        throw CoreTooLarge("core has " + std::to_string(core.size()) + " vertices, limit " +
                           std::to_string(kHallMaxCore));
    }

    // Walk all subsets in Gray-code order, keeping per-supported-vertex
    // multiplicities so each step costs one neighborhood.
    const std::size_t k = core.size();
    std::vector<int> hits(static_cast<std::size_t>(s.order()) + 1, 0);
    int covered = 0;
    std::uint32_t mask = 0;
    for (std::uint32_t step = 1; step < (std::uint32_t{1} << k); ++step) {
        const auto bit = static_cast<std::size_t>(__builtin_ctz(step));
        const Vertex c = core[bit];
        mask ^= std::uint32_t{1} << bit;
        const bool adding = (mask >> bit) & 1U;
        for (Vertex w : s.neighbors(c)) {
            if (!d.in_supp(w)) {
                continue;
            }
            int& h = hits[static_cast<std::size_t>(w)];
            if (adding) {
                covered += (h++ == 0);
            } else {
                covered -= (--h == 0);
            }
        }
        if (covered <= __builtin_popcount(mask)) {
            std::vector<Vertex> u;
            for (std::size_t i = 0; i < k; ++i) {
                if ((mask >> i) & 1U) {
                    u.push_back(core[i]);
                }
            }
            return u;
        }
    }
    return std::nullopt;
}

Matching core_saturating_matching(const Tree& s, const Decomposition& d) {
    if (d.order != s.order()) {
        throw DimensionMismatch("decomposition does not belong to this tree");
    }
    if (!is_s_tree(s)) {
        throw NotSTree("core-saturating matchings exist only in S-trees");
    }
    if (d.core.empty()) {
        throw EmptyCore("the tree has no core vertices");
    }
    std::vector<Vertex> supp_mate(static_cast<std::size_t>(s.order()) + 1, 0);
    std::vector<bool> seen;
    std::function<bool(Vertex)> augment = [&](Vertex c) {
        for (Vertex w : s.neighbors(c)) {
            if (!d.in_supp(w) || seen[static_cast<std::size_t>(w)]) {
                continue;
            }
            seen[static_cast<std::size_t>(w)] = true;
            Vertex& owner = supp_mate[static_cast<std::size_t>(w)];
            if (owner == 0 || augment(owner)) {
                owner = c;
                return true;
            }
        }
        return false;
    };
    for (Vertex c : d.core) {
        seen.assign(static_cast<std::size_t>(s.order()) + 1, false);
        if (!augment(c)) {
            throw std::logic_error("core vertex " + std::to_string(c) + " cannot be saturated");
        }
    }
    std::vector<Edge> edges;
    for (Vertex w = 1; w <= s.order(); ++w) {
        if (supp_mate[static_cast<std::size_t>(w)] != 0) {
            edges.emplace_back(supp_mate[static_cast<std::size_t>(w)], w);
        }
    }
    return Matching(s, std::move(edges));
}

int domination_number_bruteforce(const Tree& t) {
    const int n = t.order();
    if (n > kDominationMaxOrder) {
        throw TooLarge("domination search limited to " + std::to_string(kDominationMaxOrder) + " vertices");
    }
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        std::uint32_t m = std::uint32_t{1} << (v - 1);
        for (Vertex w : t.neighbors(v)) {
            m |= std::uint32_t{1} << (w - 1);
        }
        closed[static_cast<std::size_t>(v - 1)] = m;
    }
    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    for (int k = 1; k <= n; ++k) {
        // Gosper's hack: all n-bit masks with k bits set, ascending.
        std::uint32_t set = (std::uint32_t{1} << k) - 1;
        while (set <= full) {
            std::uint32_t dominated = 0;
            for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
                dominated |= closed[static_cast<std::size_t>(__builtin_ctz(rest))];
            }
            if (dominated == full) {
                return k;
            }
            const std::uint32_t low = set & (~set + 1);
            const std::uint32_t ripple = set + low;
            if (ripple == 0) {
                break;
            }
            set = (((ripple ^ set) >> 2) / low) | ripple;
        }
    }
    return n;
}

}  // namespace nulltree
