#include "nulltree/tree.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <sstream>

#include "nulltree/errors.hpp"

namespace nulltree {

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw NotATree("vertex count must be positive, got " + std::to_string(n_));
    }
    adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const Edge& e : edges_) {
        if (e.u == e.v) {
            throw NotATree("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u < 1 || e.v > n_) {
            throw NotATree("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} uses a label outside 1.." + std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw NotATree("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                       "}");
    }
    if (static_cast<int>(edges_.size()) != n_ - 1) {
        throw NotATree(std::to_string(edges_.size()) + " edges on " + std::to_string(n_) +
                       " vertices");
    }
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }

    // n-1 edges plus connectivity rules out cycles.
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    std::vector<Vertex> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj_[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != n_) {
        throw NotATree("graph is disconnected (contains a cycle or is a forest)");
    }
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
    require_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Tree::adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

void Tree::require_vertex(Vertex v) const {
    if (!contains(v)) {
        throw InvalidVertex("vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
    }
}

std::optional<Vertex> Component::local(Vertex original) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), original);
    if (it == labels.end() || *it != original) {
        return std::nullopt;
    }
    return static_cast<Vertex>(it - labels.begin()) + 1;
}

std::vector<Edge> Component::original_edges() const {
    std::vector<Edge> out;
    out.reserve(tree.edges().size());
    for (const Edge& e : tree.edges()) {
        out.emplace_back(original(e.u), original(e.v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Forest::order() const {
    std::size_t total = 0;
    for (const auto& c : components) {
        total += c.labels.size();
    }
    return total;
}

std::vector<Component> induced_components(const Tree& t, const std::vector<bool>& keep) {
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<bool> seen(n + 1, false);
    std::vector<Component> out;
    for (Vertex start = 1; start <= t.order(); ++start) {
        if (!keep[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<Vertex> members;
        std::vector<Vertex> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (Vertex y : t.neighbors(x)) {
                if (keep[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    stack.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());

        std::vector<Edge> local_edges;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (Vertex y : t.neighbors(members[i])) {
                if (y <= members[i] || !keep[static_cast<std::size_t>(y)]) {
                    continue;
                }
                auto j = std::lower_bound(members.begin(), members.end(), y) - members.begin();
                local_edges.emplace_back(static_cast<Vertex>(i) + 1, static_cast<Vertex>(j) + 1);
            }
        }
        out.push_back(Component{Tree(static_cast<int>(members.size()), std::move(local_edges)),
                                std::move(members)});
    }
    return out;
}

namespace {

std::string_view trim_cr(std::string_view line) {
    while (!line.empty() && (line.back() == '\r')) {
        line.remove_suffix(1);
    }
    return line;
}

bool parse_uint(std::string_view s, long long& value) {
    if (s.empty() || s.size() > 9) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size() && s.front() != '-' &&
           s.front() != '+';
}

}  // namespace

Tree parse_tree(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = trim_cr(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto where = [&] { return "line " + std::to_string(line_no) + ": '" + std::string(line) + "'"; };
        if (!n) {
            long long value = 0;
            if (!parse_uint(line, value) || value < 1) {
                throw ParseError(where() + " is not a positive vertex count");
            }
            n = static_cast<int>(value);
            continue;
        }
        auto space = line.find(' ');
        long long a = 0;
        long long b = 0;
        if (space == std::string_view::npos || !parse_uint(line.substr(0, space), a) ||
            !parse_uint(line.substr(space + 1), b)) {
            throw ParseError(where() + " is not of the form 'u v'");
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!n) {
        throw ParseError("missing vertex count");
    }
    return Tree(*n, std::move(edges));
}

std::string format_tree(const Tree& t) {
    std::ostringstream os;
    os << t.order() << '\n';
    for (const Edge& e : t.edges()) {
        os << e.u << ' ' << e.v << '\n';
    }
    return os.str();
}

Tree tree_from_pruefer(int n, std::span<const Vertex> sequence) {
    if (n < 1) {
        throw NotATree("vertex count must be positive");
    }
    if (n == 1) {
        return Tree::single_vertex();
    }
    if (static_cast<int>(sequence.size()) != n - 2) {
        throw DimensionMismatch("Prüfer sequence for n=" + std::to_string(n) + " must have length " +
                                std::to_string(n - 2));
    }
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (Vertex x : sequence) {
        if (x < 1 || x > n) {
            throw InvalidVertex("Prüfer entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
        }
        ++degree[static_cast<std::size_t>(x)];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 1; v <= n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push(v);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (Vertex x : sequence) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1) {
            leaves.push(x);
        }
    }
    Vertex a = leaves.top();
    leaves.pop();
    Vertex b = leaves.top();
    edges.emplace_back(a, b);
    return Tree(n, std::move(edges));
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) {
        throw NotATree("vertex count must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<Vertex> sequence;
    for (int i = 0; i + 2 < n; ++i) {
        sequence.push_back(pick(rng));
    }
    return tree_from_pruefer(n, sequence);
}

std::vector<Vertex> branch(const Tree& t, Vertex u, Vertex v) {
    t.require_vertex(u);
    t.require_vertex(v);
    if (u == v) {
        throw InvalidVertex("branch needs two distinct vertices, got " + std::to_string(u) + " twice");
    }
    // Root at u; the branch is the subtree below v.
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<Vertex> parent(n + 1, 0);
    std::vector<Vertex> stack{u};
    parent[static_cast<std::size_t>(u)] = u;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : t.neighbors(x)) {
            if (parent[static_cast<std::size_t>(y)] == 0) {
                parent[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
            }
        }
    }
    std::vector<Vertex> out;
    stack.push_back(v);
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (Vertex y : t.neighbors(x)) {
            if (y != parent[static_cast<std::size_t>(x)]) {
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Tree attach_pendant(const Tree& s, Vertex c, Vertex new_label) {
    s.require_vertex(c);
    if (new_label != s.order() + 1) {
        throw LabelClash("new vertex must be labeled " + std::to_string(s.order() + 1) + ", got " +
                         std::to_string(new_label));
    }
    auto edges = s.edges();
    edges.emplace_back(c, new_label);
    return Tree(new_label, std::move(edges));
}

Tree replace_edge(const Tree& t, const Edge& removed, const Edge& added) {
    if (!t.has_edge(removed)) {
        throw InvalidVertex("edge {" + std::to_string(removed.u) + "," + std::to_string(removed.v) +
                            "} is not in the tree");
    }
    t.require_vertex(added.u);
    t.require_vertex(added.v);
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (const Edge& e : t.edges()) {
        if (e != removed) {
            edges.push_back(e);
        }
    }
    edges.push_back(added);
    return Tree(t.order(), std::move(edges));
}

Forest delete_vertex(const Tree& t, Vertex v) {
    t.require_vertex(v);
    std::vector<bool> keep(static_cast<std::size_t>(t.order()) + 1, true);
    keep[static_cast<std::size_t>(v)] = false;
    return Forest{induced_components(t, keep)};
}

Tree path_tree(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Tree(n, std::move(edges));
}

Tree star_tree(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= n; ++v) {
        edges.emplace_back(1, v);
    }
    return Tree(n, std::move(edges));
}

}  // namespace nulltree
