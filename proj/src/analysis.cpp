#include "nulltree/analysis.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nulltree/errors.hpp"
#include "nulltree/matching.hpp"

namespace nulltree {

namespace {

std::string join(const std::vector<Vertex>& xs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i ? "," : "") << xs[i];
    }
    os << '}';
    return os.str();
}

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

int nullity_of(const Tree& t) { return rank_nullity(adjacency_matrix(t)).nullity; }

int nullity_of(const Forest& f) {
    int total = 0;
    for (const auto& c : f.components) {
        total += nullity_of(c.tree);
    }
    return total;
}

std::vector<Vertex> to_local(const Component& c, const std::vector<Vertex>& host) {
    std::vector<Vertex> out;
    for (Vertex v : host) {
        if (auto l = c.local(v)) {
            out.push_back(*l);
        }
    }
    return out;
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Edges lying in at least one maximum matching: {a,b} qualifies iff
// nu(T - a - b) == nu(T) - 1.
std::vector<Edge> edges_in_some_maximum_matching(const Tree& t) {
    const int nu = matching_number(t);
    std::vector<Edge> out;
    for (const Edge& e : t.edges()) {
        const Vertex ends[] = {e.u, e.v};
        if (matching_number_without(t, ends) == nu - 1) {
            out.push_back(e);
        }
    }
    return out;
}

// Returns an empty string on success, otherwise the failure detail.
using CheckBody = std::function<std::string(std::string& note)>;

struct Skip {
    std::string reason;
};

}  // namespace

bool is_n_tree(const Tree& t) {
    const bool perfect = t.order() % 2 == 0 && 2 * matching_number(t) == t.order();
    const bool invertible = rank_nullity(adjacency_matrix(t)).rank == t.order();
    if (perfect != invertible) {
        throw std::logic_error("perfect matching and invertibility disagree");
    }
    return perfect;
}

Formulas formulas(const Tree& t, const Decomposition& d) {
    if (d.order != t.order()) {
        throw DimensionMismatch("decomposition does not belong to this tree");
    }
    const int n_forest = static_cast<int>(d.n_vertices.size());
    Formulas f;
    f.nu = static_cast<int>(d.core.size()) + n_forest / 2;
    f.alpha = static_cast<int>(d.supp.size()) + n_forest / 2;
    f.m = 1;
    for (const Part& s : d.s_parts) {
        f.m *= matching_count(s.component.tree).count;
        f.nullity += nullity_of(s.component.tree);
    }
    return f;
}

NeumaierReport neumaier_counterexamples(const Tree& t) {
    const Decomposition d = decompose(t);
    NeumaierReport r;
    r.nullity = nullity_of(t);
    r.s_tree = d.n_vertices.empty();
    r.essential = d.supp;
    r.special = d.core;
    r.inessential = d.n_vertices;

    for (Vertex u : r.inessential) {
        r.deletions.push_back({u, nullity_of(delete_vertex(t, u))});
    }
    r.deletion_keeps_nullity = std::all_of(r.deletions.begin(), r.deletions.end(),
                               [&](const auto& del) { return del.nullity == r.nullity; });
    r.no_inessential = r.inessential.empty();

    const std::vector<Vertex> eg = edmond_gallai(t);
    std::vector<Vertex> always_saturated;
    for (Vertex v = 1; v <= t.order(); ++v) {
        if (!contains(eg, v)) {
            always_saturated.push_back(v);
        }
    }
    r.special_iff_always_saturated = always_saturated == r.special;

    r.edges_touch_special = std::all_of(t.edges().begin(), t.edges().end(), [&](const Edge& e) {
        return contains(r.special, e.u) || contains(r.special, e.v);
    });

    const int nu = matching_number(t);
    r.special_count_is_nu = static_cast<int>(r.special.size()) == nu;
    for (const Edge& e : edges_in_some_maximum_matching(t)) {
        if (contains(r.special, e.u) == contains(r.special, e.v)) {
            r.special_count_is_nu = false;
        }
    }
    return r;
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "decomposition-invariants",
        "null-basis-annihilated",
        "pendant-neighbor-unsupported",
        "support-basis-invariance",
        "supp-from-two-oracles",
        "s-components-are-s-trees",
        "n-components-are-n-trees",
        "nullity-additivity",
        "rank-twice-matching-number",
        "charpoly-matching-polynomial",
        "formulas-vs-dp",
        "formulas-vs-oracle",
        "konig-egervary",
        "domination-below-independence",
        "no-connection-edge-in-max-matching",
        "s-tree-structure",
        "core-saturating-matching",
        "desaturater-contract",
        "reroute-connection-edge",
        "rewire-stability",
        "attach-preserves-s-tree",
        "core-empty-iff-trivial",
        "neumaier-refutation",
    };
    return names;
}

VerificationReport verify(const Tree& t, const VerifyOptions& options) {
    const int n = t.order();
    const bool small = n <= options.bound.max_n && (n > 62 || (std::uint64_t{1} << n) <= options.bound.max_subsets);

    const Decomposition d = decompose(t);
    const RationalMatrix a = adjacency_matrix(t);
    const auto basis = null_space_basis(a);
    const RankNullity rn = rank_nullity(a);
    const CountResult mc = matching_count(t);
    const IndependenceResult ind = independence(t);
    const int nu = matching_number(t);

    std::vector<bool> in_supp(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> in_core(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> in_nf(static_cast<std::size_t>(n) + 1, false);
    for (Vertex v : d.supp) in_supp[static_cast<std::size_t>(v)] = true;
    for (Vertex v : d.core) in_core[static_cast<std::size_t>(v)] = true;
    for (Vertex v : d.n_vertices) in_nf[static_cast<std::size_t>(v)] = true;

    VerificationReport report;
    auto run = [&](const std::string& name, const std::function<std::string(std::string&)>& body) {
        Check check{name, CheckStatus::Pass, {}};
        try {
            std::string note;
            std::string failure = body(note);
            if (!failure.empty()) {
                check.status = CheckStatus::Fail;
                check.detail = failure;
            } else {
                check.detail = note;
            }
        } catch (const Skip& s) {
            check.status = CheckStatus::Skipped;
            check.detail = s.reason;
        } catch (const std::exception& e) {
            check.status = CheckStatus::Fail;
            check.detail = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(check));
    };
    auto require_small = [&] {
        if (!small) {
            throw Skip{"tree order " + std::to_string(n) + " exceeds oracle bound " +
                       std::to_string(options.bound.max_n)};
        }
    };

    run("decomposition-invariants", [&](std::string&) -> std::string {
        for (Vertex v = 1; v <= n; ++v) {
            const auto i = static_cast<std::size_t>(v);
            if (int(in_supp[i]) + int(in_core[i]) + int(in_nf[i]) != 1) {
                return "vertex " + std::to_string(v) + " is not in exactly one of supp/core/N-forest";
            }
        }
        for (const Edge& e : t.edges()) {
            if (in_supp[static_cast<std::size_t>(e.u)] && in_supp[static_cast<std::size_t>(e.v)]) {
                return "supported vertices adjacent along " + edge_str(e);
            }
        }
        std::vector<bool> nbr(static_cast<std::size_t>(n) + 1, false);
        for (Vertex v : d.supp) {
            for (Vertex w : t.neighbors(v)) nbr[static_cast<std::size_t>(w)] = true;
        }
        if (nbr != in_core) {
            return "core differs from N(supp)";
        }
        std::size_t part_edges = 0;
        for (const Part& s : d.s_parts) {
            part_edges += s.component.tree.edges().size();
            std::vector<bool> closed(static_cast<std::size_t>(n) + 1, false);
            for (Vertex v : s.supp) {
                closed[static_cast<std::size_t>(v)] = true;
                for (Vertex w : t.neighbors(v)) closed[static_cast<std::size_t>(w)] = true;
            }
            for (Vertex v : s.vertices()) {
                if (!closed[static_cast<std::size_t>(v)]) {
                    return "S-part vertex " + std::to_string(v) + " outside N[Supp(T) ∩ V(S)]";
                }
            }
            if (n >= 2 && s.vertices().size() < 3) {
                return "S-part " + join(s.vertices()) + " has fewer than 3 vertices";
            }
        }
        for (const Part& p : d.n_parts) {
            part_edges += p.component.tree.edges().size();
        }
        for (const Edge& e : d.connection_edges) {
            const bool ok = (in_core[static_cast<std::size_t>(e.u)] && in_nf[static_cast<std::size_t>(e.v)]) ||
                            (in_core[static_cast<std::size_t>(e.v)] && in_nf[static_cast<std::size_t>(e.u)]);
            if (!ok) {
                return "connection edge " + edge_str(e) + " does not join core to N-forest";
            }
        }
        if (part_edges + d.connection_edges.size() != t.edges().size()) {
            return "edges are not partitioned by S-forest, N-forest and connection edges";
        }
        return {};
    });

    run("null-basis-annihilated", [&](std::string& note) -> std::string {
        std::size_t last_lead = 0;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const auto& x = basis[k];
            for (const auto& entry : a * x) {
                if (sgn(entry) != 0) return "A*x != 0 for basis vector " + to_string(x);
            }
            for (Vertex u = 1; u <= n; ++u) {
                if (sgn(weight(t, x, u)) != 0) return "non-zero weight at " + std::to_string(u);
            }
            const auto lead = static_cast<std::size_t>(support(x).front());
            if (k > 0 && lead <= last_lead) return "leading coordinates not increasing";
            if (x[lead - 1] != 1) return "leading entry is not 1";
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (j != k && sgn(basis[j][lead - 1]) != 0) return "pivot coordinate shared between basis vectors";
            }
            last_lead = lead;
        }
        note = "nullity " + std::to_string(basis.size());
        return {};
    });

    run("pendant-neighbor-unsupported", [&](std::string&) -> std::string {
        if (n < 2) return {};
        for (Vertex v = 1; v <= n; ++v) {
            if (t.degree(v) == 1 && in_supp[static_cast<std::size_t>(t.neighbors(v)[0])]) {
                return "neighbor " + std::to_string(t.neighbors(v)[0]) + " of pendant " + std::to_string(v) +
                       " is supported";
            }
        }
        return {};
    });

    run("support-basis-invariance", [&](std::string&) -> std::string {
        if (basis.empty()) return {};
        // Invertible recombination: reverse order, add each vector to its
        // successor and scale by position.
        std::vector<RationalVector> mixed(basis.rbegin(), basis.rend());
        for (std::size_t k = 0; k + 1 < mixed.size(); ++k) {
            for (std::size_t i = 0; i < mixed[k].size(); ++i) mixed[k + 1][i] += mixed[k][i];
        }
        for (std::size_t k = 0; k < mixed.size(); ++k) {
            const Rational scale = Rational(static_cast<long>(k) + 2) / 3;
            for (auto& entry : mixed[k]) entry *= scale;
        }
        if (support(mixed) != d.supp) return "support changed under change of basis";
        const RationalVector z = combine_full_support(basis);
        if (support(z) != d.supp) return "combined vector misses part of the support";
        if (!solve_combination(basis, z)) return "combined vector is not in the null space";
        return {};
    });

    run("supp-from-two-oracles", [&](std::string& note) -> std::string {
        const auto eg = edmond_gallai(t);
        if (eg != d.supp) return "Supp " + join(d.supp) + " != EG " + join(eg);
        note = "Supp = EG = " + join(eg);
        return {};
    });

    run("s-components-are-s-trees", [&](std::string&) -> std::string {
        for (const Part& s : d.s_parts) {
            const Tree& st = s.component.tree;
            if (!is_s_tree(st)) return "S-part " + join(s.vertices()) + " is not an S-tree";
            const Decomposition local = decompose(st);
            if (local.supp != to_local(s.component, s.supp)) {
                return "Supp(S) != Supp(T) ∩ V(S) for " + join(s.vertices());
            }
            if (local.core != to_local(s.component, s.core)) {
                return "Core(S) != Core(T) ∩ V(S) for " + join(s.vertices());
            }
        }
        return {};
    });

    run("n-components-are-n-trees", [&](std::string&) -> std::string {
        for (const Part& p : d.n_parts) {
            if (!is_n_tree(p.component.tree)) return "N-part " + join(p.vertices()) + " has no perfect matching";
        }
        return {};
    });

    run("nullity-additivity", [&](std::string& note) -> std::string {
        int total = 0;
        std::vector<std::vector<RationalVector>> lifted;
        for (const Part& s : d.s_parts) {
            const auto local = null_space_basis(adjacency_matrix(s.component.tree));
            total += static_cast<int>(local.size());
            auto& out = lifted.emplace_back();
            for (const auto& x : local) {
                out.push_back(lift(x, n, s.vertices()));
                for (const auto& entry : a * out.back()) {
                    if (sgn(entry) != 0) return "lifted vector of " + join(s.vertices()) + " leaves the null space";
                }
            }
        }
        if (total != rn.nullity) {
            return "sum of S-part nullities " + std::to_string(total) + " != nullity " + std::to_string(rn.nullity);
        }
        std::vector<RationalVector> all;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            for (std::size_t j = i + 1; j < lifted.size(); ++j) {
                for (const auto& x : lifted[i]) {
                    for (const auto& y : lifted[j]) {
                        Rational dot = 0;
                        for (std::size_t k = 0; k < x.size(); ++k) dot += x[k] * y[k];
                        if (sgn(dot) != 0) return "lifted vectors of different S-parts are not orthogonal";
                    }
                }
            }
            all.insert(all.end(), lifted[i].begin(), lifted[i].end());
        }
        if (!same_span(all, basis)) return "lifted S-part bases do not span N(T)";
        note = "nullity " + std::to_string(total);
        return {};
    });

    run("rank-twice-matching-number", [&](std::string& note) -> std::string {
        if (rn.rank != 2 * nu) return "rank " + std::to_string(rn.rank) + " != 2*nu = " + std::to_string(2 * nu);
        note = "rank " + std::to_string(rn.rank);
        return {};
    });

    run("charpoly-matching-polynomial", [&](std::string& note) -> std::string {
        const IntPolynomial p = characteristic_polynomial(a);
        for (int i = 0; i <= n; ++i) {
            if ((n - i) % 2 == 1 && p[static_cast<std::size_t>(i)] != 0) {
                return "coefficient of x^" + std::to_string(i) + " is non-zero";
            }
        }
        if (abs(p[static_cast<std::size_t>(rn.nullity)]) != mc.count) {
            return "|c_nullity| = " + p[static_cast<std::size_t>(rn.nullity)].get_str() + " != m = " + mc.count.get_str();
        }
        if (!small) {
            note = "matching-count comparison beyond c_nullity skipped (oracle bound)";
            return {};
        }
        const auto census = oracle::brute_matchings(t, options.bound);
        for (std::size_t k = 0; 2 * k <= static_cast<std::size_t>(n); ++k) {
            Integer expected = k < census.by_size.size() ? Integer(static_cast<unsigned long>(census.by_size[k])) : Integer(0);
            if (k % 2 == 1) expected = -expected;
            if (p[static_cast<std::size_t>(n) - 2 * k] != expected) {
                return "coefficient of x^" + std::to_string(n - 2 * static_cast<int>(k)) + " differs from the matching polynomial";
            }
        }
        return {};
    });

    const Formulas f = formulas(t, d);
    run("formulas-vs-dp", [&](std::string& note) -> std::string {
        const Formulas dp{mc.optimum, ind.alpha, mc.count, rn.nullity};
        if (!(f == dp)) {
            return "formulas (" + std::to_string(f.nu) + "," + std::to_string(f.alpha) + "," + f.m.get_str() + "," +
                   std::to_string(f.nullity) + ") != dp (" + std::to_string(dp.nu) + "," + std::to_string(dp.alpha) +
                   "," + dp.m.get_str() + "," + std::to_string(dp.nullity) + ")";
        }
        note = "nu=" + std::to_string(f.nu) + " alpha=" + std::to_string(f.alpha) + " m=" + f.m.get_str() +
               " nullity=" + std::to_string(f.nullity);
        return {};
    });

    run("formulas-vs-oracle", [&](std::string&) -> std::string {
        require_small();
        const auto census = oracle::brute_matchings(t, options.bound);
        const auto indep = oracle::brute_independent_sets(t, options.bound);
        if (f.nu != census.nu) return "nu formula " + std::to_string(f.nu) + " != brute " + std::to_string(census.nu);
        if (f.m != Integer(static_cast<unsigned long>(census.m))) {
            return "m formula " + f.m.get_str() + " != brute " + std::to_string(census.m);
        }
        if (f.alpha != indep.optimum) {
            return "alpha formula " + std::to_string(f.alpha) + " != brute " + std::to_string(indep.optimum);
        }
        if (Integer(static_cast<unsigned long>(indep.count)) != ind.count) return "independent-set count differs from DP";
        if (f.nullity != n - 2 * census.nu) return "nullity formula disagrees with n - 2 nu";
        return {};
    });

    run("konig-egervary", [&](std::string&) -> std::string {
        const VertexCoverResult cover = minimum_vertex_cover(t);
        if (cover.tau != nu || nu + ind.alpha != n) return "nu, tau, alpha violate nu = tau = n - alpha";
        if (small) {
            const auto covers = oracle::brute_vertex_covers(t, options.bound);
            if (covers.optimum != nu) return "brute-force tau != nu";
            if (Integer(static_cast<unsigned long>(covers.count)) != cover.count) return "cover count differs from DP";
        }
        return {};
    });

    run("domination-below-independence", [&](std::string& note) -> std::string {
        if (n > kDominationMaxOrder) {
            throw Skip{"tree order exceeds the domination search limit"};
        }
        const int gamma = domination_number_bruteforce(t);
        if (small && gamma != oracle::brute_dominating_sets(t, options.bound)) return "domination searches disagree";
        if (gamma > ind.alpha) return "gamma " + std::to_string(gamma) + " > alpha " + std::to_string(ind.alpha);
        if (d.n_vertices.empty() && n >= 3 && gamma > static_cast<int>(d.core.size())) {
            return "gamma exceeds core size in an S-tree";
        }
        note = "gamma=" + std::to_string(gamma) + " alpha=" + std::to_string(ind.alpha) +
               " core=" + std::to_string(d.core.size());
        return {};
    });

    run("no-connection-edge-in-max-matching", [&](std::string& note) -> std::string {
        try {
            const auto all = enumerate_maximum_matchings(t, options.enumeration_limit);
            if (Integer(static_cast<unsigned long>(all.size())) != mc.count) return "enumeration count != m(T)";
            if (small && all != oracle::brute_matchings(t, options.bound).all_max) {
                return "enumerator and brute force list different maximum matchings";
            }
            for (const auto& m : all) {
                for (const Edge& e : m.edges()) {
                    if (d.is_connection_edge(e)) return "maximum matching uses connection edge " + edge_str(e);
                }
            }
            note = std::to_string(all.size()) + " maximum matchings";
        } catch (const Truncated&) {
            for (const Edge& e : edges_in_some_maximum_matching(t)) {
                if (d.is_connection_edge(e)) return "connection edge " + edge_str(e) + " lies in a maximum matching";
            }
            note = "too many maximum matchings to list; checked edge by edge";
        }
        return {};
    });

    run("s-tree-structure", [&](std::string&) -> std::string {
        for (const Part& s : d.s_parts) {
            const Tree& st = s.component.tree;
            const auto supp = to_local(s.component, s.supp);
            const auto core = to_local(s.component, s.core);
            const std::string where = " in S-part " + join(s.vertices());
            const IndependenceResult si = independence(st);
            if (si.count != 1 || si.witness != supp) return "Supp(S) is not the unique maximum independent set" + where;
            const VertexCoverResult sc = minimum_vertex_cover(st);
            if (sc.count != 1 || sc.witness != core) return "Core(S) is not the unique minimum vertex cover" + where;
            if (edmond_gallai(st) != supp) return "EG(S) != Supp(S)" + where;
            const int snu = matching_number(st);
            if (st.order() >= 2 && snu != static_cast<int>(core.size())) return "nu(S) != core(S)" + where;
            auto one_core_end = [&](const Edge& e) { return contains(core, e.u) != contains(core, e.v); };
            try {
                for (const auto& m : enumerate_maximum_matchings(st, options.enumeration_limit)) {
                    if (!std::all_of(m.edges().begin(), m.edges().end(), one_core_end)) {
                        return "maximum matching edge without exactly one core endpoint" + where;
                    }
                }
            } catch (const Truncated&) {
                for (const Edge& e : edges_in_some_maximum_matching(st)) {
                    if (!one_core_end(e)) return "maximum matching edge without exactly one core endpoint" + where;
                }
            }
            if (!core.empty() && core.size() <= kHallMaxCore) {
                const Decomposition local = decompose(st);
                if (auto bad = hall_check(st, local)) return "Hall's condition fails for U = " + join(*bad) + where;
            }
        }
        return {};
    });

    run("core-saturating-matching", [&](std::string&) -> std::string {
        for (const Part& s : d.s_parts) {
            if (s.core.empty()) continue;
            const Tree& st = s.component.tree;
            const Decomposition local = decompose(st);
            const Matching m = core_saturating_matching(st, local);
            if (m.size() != static_cast<int>(local.core.size())) return "matching smaller than the core";
            for (const Edge& e : m.edges()) {
                if (!(local.in_core(e.u) && local.in_supp(e.v)) && !(local.in_core(e.v) && local.in_supp(e.u))) {
                    return "edge does not join core to support";
                }
            }
        }
        return {};
    });

    run("desaturater-contract", [&](std::string&) -> std::string {
        for (const Part& s : d.s_parts) {
            const Tree& st = s.component.tree;
            const Matching m = maximum_matching(st);
            for (Vertex v : to_local(s.component, s.supp)) {
                if (!m.saturates(v)) continue;
                const Matching out = desaturate(st, m, v);
                if (out.size() != m.size() || out.saturates(v)) {
                    return "desaturate failed at vertex " + std::to_string(s.component.original(v));
                }
            }
        }
        return {};
    });

    run("reroute-connection-edge", [&](std::string&) -> std::string {
        const Matching base = maximum_matching(t);
        for (const Edge& e : d.connection_edges) {
            std::vector<Edge> edges{e};
            for (const Edge& x : base.edges()) {
                if (!x.contains(e.u) && !x.contains(e.v)) edges.push_back(x);
            }
            const Matching m(t, edges);
            const Matching out = reroute_connection_edge(t, d, m, e);
            auto conn = [&](const Matching& mm) {
                return std::count_if(mm.edges().begin(), mm.edges().end(),
                                     [&](const Edge& x) { return d.is_connection_edge(x); });
            };
            if (out.size() != m.size() || conn(out) >= conn(m)) return "reroute failed for " + edge_str(e);
        }
        return {};
    });

    run("rewire-stability", [&](std::string& note) -> std::string {
        struct Triple {
            Edge e;
            Vertex u;
            Vertex v;
        };
        std::vector<Triple> triples;
        for (const Edge& e : d.connection_edges) {
            const Vertex core_end = d.in_core(e.u) ? e.u : e.v;
            const Part& s = d.s_parts[*d.s_part_of(core_end)];
            const Part& np = d.n_parts[*d.n_part_of(e.other(core_end))];
            for (Vertex u : s.core) {
                for (Vertex v : np.vertices()) triples.push_back({e, u, v});
            }
        }
        if (triples.size() > options.rewire_samples) {
            std::mt19937_64 rng(options.seed);
            std::shuffle(triples.begin(), triples.end(), rng);
            triples.resize(options.rewire_samples);
        }
        for (const auto& [e, u, v] : triples) {
            const Tree r = rewire(t, d, e, u, v);
            const RationalMatrix ar = adjacency_matrix(r);
            const std::string where = " for T(" + edge_str(e) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
            if (null_space_basis(ar) != basis) return "null space changed" + where;
            const RankNullity rr = rank_nullity(ar);
            if (rr.rank != rn.rank || rr.nullity != rn.nullity) return "rank/nullity changed" + where;
            if (matching_number(r) != nu) return "matching number changed" + where;
            const Decomposition dr = decompose(r);
            if (rewire(r, dr, Edge(u, v), d.in_core(e.u) ? e.u : e.v, d.in_core(e.u) ? e.v : e.u) != t) {
                return "rewiring back does not restore T" + where;
            }
        }
        note = std::to_string(triples.size()) + " rewirings";
        return {};
    });

    run("attach-preserves-s-tree", [&](std::string&) -> std::string {
        for (const Part& s : d.s_parts) {
            const Tree& st = s.component.tree;
            for (Vertex c : to_local(s.component, s.core)) {
                if (!is_s_tree(attach_pendant(st, c, st.order() + 1))) {
                    return "attaching at core vertex " + std::to_string(s.component.original(c)) + " breaks the S-tree";
                }
            }
        }
        return {};
    });

    run("core-empty-iff-trivial", [&](std::string&) -> std::string {
        for (const Part& s : d.s_parts) {
            if (s.core.empty() != (s.vertices().size() == 1)) return "empty core in a non-trivial S-part";
            for (Vertex c : s.core) {
                const auto nb = t.neighbors(c);
                const auto count = std::count_if(nb.begin(), nb.end(),
                                                 [&](Vertex w) { return in_supp[static_cast<std::size_t>(w)]; });
                if (count < 2) return "core vertex " + std::to_string(c) + " has fewer than 2 supported neighbors";
            }
        }
        return {};
    });

    run("neumaier-refutation", [&](std::string& note) -> std::string {
        const NeumaierReport r = neumaier_counterexamples(t);
        for (const auto& del : r.deletions) {
            const Vertex removed[] = {del.vertex};
            const int predicted = (n - 1) - 2 * matching_number_without(t, removed);
            if (del.nullity != predicted) {
                return "nullity of T-" + std::to_string(del.vertex) + " is " + std::to_string(del.nullity) +
                       " by elimination but " + std::to_string(predicted) + " by matchings";
            }
        }
        const bool statements[] = {r.no_inessential, r.special_iff_always_saturated, r.edges_touch_special, r.special_count_is_nu};
        const char* labels[] = {"no-inessential", "special-iff-always-saturated", "edges-touch-special",
                                "special-count-is-nu"};
        for (int i = 0; i < 4; ++i) {
            if (statements[i] != r.s_tree) {
                return std::string("statement ") + labels[i] + " is " + (statements[i] ? "true" : "false") +
                       " but the tree is " + (r.s_tree ? "" : "not ") + "an S-tree";
            }
        }
        std::ostringstream os;
        os << "nullity " << r.nullity << "; inessential deletion keeps nullity: "
           << (r.deletion_keeps_nullity ? "holds" : "refuted");
        for (const auto& del : r.deletions) {
            if (del.nullity != r.nullity) {
                os << "; nullity(T-" << del.vertex << ")=" << del.nullity;
            }
        }
        os << "; special-vertex statements " << (r.s_tree ? "hold (S-tree)" : "refuted (not an S-tree)");
        note = os.str();
        return {};
    });

    return report;
}

}  // namespace nulltree
