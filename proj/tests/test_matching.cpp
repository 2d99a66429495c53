#include <doctest.h>

#include <algorithm>

#include "nulltree/errors.hpp"
#include "nulltree/matching.hpp"
#include "nulltree/oracle.hpp"
#include "support.hpp"

using namespace nulltree;
using testing::fixture;

namespace {

Integer big(std::uint64_t x) { return Integer(static_cast<unsigned long>(x)); }

// Caterpillar: spine 1..k, each spine vertex carrying two pendant leaves.
Tree double_broom_caterpillar(int k) {
    std::vector<Edge> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
    int next = k + 1;
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(i, next++);
        edges.emplace_back(i, next++);
    }
    return Tree(3 * k, edges);
}

}  // namespace

TEST_CASE("Matching validates its edges") {
    const Tree t = fixture("fig1");
    const Matching m(t, {{5, 6}, {1, 2}});
    CHECK(m.edges() == std::vector<Edge>{{1, 2}, {5, 6}});
    CHECK(m.mate(6) == 5);
    CHECK_FALSE(m.saturates(3));
    CHECK(m.saturated() == std::vector<Vertex>{1, 2, 5, 6});
    CHECK(m.contains({1, 2}));
    CHECK_THROWS_AS(Matching(t, {{2, 3}}), InvalidMatching);
    CHECK_THROWS_AS(Matching(t, {{1, 2}, {1, 3}}), InvalidMatching);
}

TEST_CASE("greedy maximum matching on fig1") {
    const Tree t = fixture("fig1");
    CHECK(maximum_matching(t).edges() == std::vector<Edge>{{1, 2}, {5, 6}});
    CHECK(matching_number(t) == 2);
    CHECK(maximum_matching(Tree::single_vertex()).size() == 0);
}

TEST_CASE("matching counts of the fixtures and small trees") {
    auto count = [](const Tree& t) {
        const CountResult r = matching_count(t);
        return std::pair{r.optimum, r.count};
    };
    CHECK(count(fixture("fig1")) == std::pair{2, Integer(3)});
    CHECK(count(fixture("fig2")) == std::pair{2, Integer(11)});
    CHECK(count(fixture("fig4")) == std::pair{7, Integer(18)});
    CHECK(count(Tree::single_vertex()) == std::pair{0, Integer(1)});
    CHECK(count(path_tree(2)) == std::pair{1, Integer(1)});
    CHECK(count(path_tree(5)) == std::pair{2, Integer(3)});
}

TEST_CASE("dynamic programs agree with exhaustive search") {
    for (const Tree& t : testing::random_corpus(300, 1, 14, 31)) {
        const auto census = oracle::brute_matchings(t);
        const CountResult mc = matching_count(t);
        CHECK(mc.optimum == census.nu);
        CHECK(mc.count == big(census.m));
        CHECK(maximum_matching(t).size() == census.nu);
        CHECK(matching_number(t) == census.nu);

        const auto indep = oracle::brute_independent_sets(t);
        const IndependenceResult ir = independence(t);
        CHECK(ir.alpha == indep.optimum);
        CHECK(ir.count == big(indep.count));
        CHECK(ir.witness == *std::min_element(indep.optimal.begin(), indep.optimal.end()));

        const auto covers = oracle::brute_vertex_covers(t);
        const VertexCoverResult vc = minimum_vertex_cover(t);
        CHECK(vc.tau == covers.optimum);
        CHECK(vc.count == big(covers.count));
        CHECK(std::find(covers.optimal.begin(), covers.optimal.end(), vc.witness) != covers.optimal.end());
    }
}

TEST_CASE("enumeration lists exactly the maximum matchings") {
    for (const Tree& t : testing::random_corpus(150, 1, 13, 32)) {
        CHECK(enumerate_maximum_matchings(t, 100000) == oracle::brute_matchings(t).all_max);
    }
    CHECK(enumerate_maximum_matchings(fixture("fig2"), 11).size() == 11);
    CHECK_THROWS_AS(enumerate_maximum_matchings(fixture("fig2"), 10), Truncated);
}

TEST_CASE("Edmonds-Gallai vertices are those missed by some maximum matching") {
    for (const Tree& t : testing::random_corpus(150, 1, 13, 33)) {
        const auto all = oracle::brute_matchings(t).all_max;
        std::vector<Vertex> missed;
        for (Vertex v = 1; v <= t.order(); ++v) {
            if (std::any_of(all.begin(), all.end(), [&](const Matching& m) { return !m.saturates(v); })) {
                missed.push_back(v);
            }
        }
        CHECK(edmond_gallai(t) == missed);
    }
    CHECK(edmond_gallai(fixture("fig2")) == std::vector<Vertex>{2, 3, 4, 5, 7, 8});
}

TEST_CASE("matching number after deleting vertices") {
    for (const Tree& t : testing::random_corpus(60, 2, 12, 34)) {
        for (Vertex v = 1; v <= t.order(); ++v) {
            int total = 0;
            for (const auto& c : delete_vertex(t, v).components) total += oracle::brute_matchings(c.tree).nu;
            CHECK(matching_number_without(t, v) == total);
            const Vertex both[] = {v, v == 1 ? 2 : 1};
            CHECK(matching_number_without(t, both) <= total);
        }
    }
}

TEST_CASE("desaturate on fig2") {
    const Tree s = fixture("fig2");
    const Matching m(s, {{1, 2}, {5, 6}});
    CHECK(desaturate(s, m, 5).edges() == std::vector<Edge>{{1, 2}, {6, 7}});
    CHECK(desaturate(s, m, 2).edges() == std::vector<Edge>{{1, 3}, {5, 6}});
    CHECK_THROWS_AS(desaturate(s, Matching(s, {{1, 2}}), 2), NotMaximum);
    CHECK_THROWS_AS(desaturate(s, m, 1), VertexNotSupported);
    CHECK_THROWS_AS(desaturate(s, m, 3), VertexUnsaturated);
    const Tree t1 = fixture("fig1");
    CHECK_THROWS_AS(desaturate(t1, Matching(t1, {{1, 2}, {5, 6}}), 2), NotSTree);
}

TEST_CASE("desaturate contract on every S-tree in a random corpus") {
    int calls = 0;
    for (const Tree& t : testing::random_corpus(400, 1, 16, 35)) {
        if (!is_s_tree(t)) continue;
        const Matching m = maximum_matching(t);
        for (Vertex v : null_support(t)) {
            if (!m.saturates(v)) continue;
            const Matching out = desaturate(t, m, v);
            CHECK(out.size() == m.size());
            CHECK_FALSE(out.saturates(v));
            ++calls;
        }
    }
    CHECK(calls > 50);
}

TEST_CASE("reroute_connection_edge on fig1") {
    const Tree t = fixture("fig1");
    const Decomposition d = decompose(t);
    const Matching m(t, {{1, 5}});
    const Matching out = reroute_connection_edge(t, d, m, {1, 5});
    CHECK(out.size() == 1);
    CHECK_FALSE(out.contains({1, 5}));
    CHECK_THROWS_AS(reroute_connection_edge(t, d, Matching(t, {{1, 2}}), {1, 5}), EdgeNotInMatching);
    CHECK_THROWS_AS(reroute_connection_edge(t, d, Matching(t, {{5, 6}}), {5, 6}), NotConnectionEdge);
}

TEST_CASE("Hall's condition and core-saturating matchings") {
    const Tree s = fixture("fig3");
    const Decomposition d = decompose(s);
    CHECK_FALSE(hall_check(s, d).has_value());
    const Matching m = core_saturating_matching(s, d);
    CHECK(m.size() == 7);
    for (const Edge& e : m.edges()) CHECK(d.in_core(e.u) != d.in_core(e.v));

    const Tree t1 = fixture("fig1");
    CHECK_THROWS_AS(hall_check(t1, decompose(t1)), NotSTree);
    CHECK_THROWS_AS(core_saturating_matching(Tree::single_vertex(), decompose(Tree::single_vertex())), EmptyCore);
    CHECK_THROWS_AS(hall_check(s, decompose(fixture("fig2"))), DimensionMismatch);

    const Tree wide = double_broom_caterpillar(21);
    REQUIRE(is_s_tree(wide));
    CHECK_THROWS_AS(hall_check(wide, decompose(wide)), CoreTooLarge);
    CHECK(core_saturating_matching(wide, decompose(wide)).size() == 21);
}

TEST_CASE("domination number by exhaustive search") {
    CHECK(domination_number_bruteforce(fixture("fig3")) == 5);
    CHECK(domination_number_bruteforce(star_tree(4)) == 1);
    CHECK(domination_number_bruteforce(path_tree(3)) == 1);
    CHECK(domination_number_bruteforce(Tree::single_vertex()) == 1);
    CHECK_THROWS_AS(domination_number_bruteforce(path_tree(25)), TooLarge);
    for (const Tree& t : testing::random_corpus(80, 1, 13, 36)) {
        CHECK(domination_number_bruteforce(t) == oracle::brute_dominating_sets(t));
    }
}
