#include <doctest.h>

#include <algorithm>

#include "nulltree/errors.hpp"
#include "nulltree/oracle.hpp"
#include "support.hpp"

using namespace nulltree;
using testing::fixture;

TEST_CASE("matching census of small trees") {
    const auto fig1 = oracle::brute_matchings(fixture("fig1"));
    CHECK(fig1.nu == 2);
    CHECK(fig1.m == 3);
    CHECK(fig1.all_max.size() == 3);
    CHECK(fig1.by_size == std::vector<std::uint64_t>{1, 5, 3});

    const auto single = oracle::brute_matchings(Tree::single_vertex());
    CHECK(single.nu == 0);
    CHECK(single.m == 1);
    REQUIRE(single.all_max.size() == 1);
    CHECK(single.all_max[0].size() == 0);

    const auto p5 = oracle::brute_matchings(path_tree(5));
    CHECK(p5.nu == 2);
    CHECK(p5.m == 3);
}

TEST_CASE("independent set and vertex cover census") {
    const auto fig2 = oracle::brute_independent_sets(fixture("fig2"));
    CHECK(fig2.optimum == 6);
    CHECK(fig2.count == 1);
    CHECK(fig2.optimal[0] == std::vector<Vertex>{2, 3, 4, 5, 7, 8});

    const auto k2 = oracle::brute_independent_sets(path_tree(2));
    CHECK(k2.optimum == 1);
    CHECK(k2.count == 2);

    const auto fig1 = oracle::brute_independent_sets(fixture("fig1"));
    CHECK(fig1.optimum == 4);
    CHECK(std::find(fig1.optimal.begin(), fig1.optimal.end(), std::vector<Vertex>{2, 3, 4, 6}) != fig1.optimal.end());

    const auto cover2 = oracle::brute_vertex_covers(fixture("fig2"));
    CHECK(cover2.optimum == 2);
    CHECK(cover2.count == 1);
    CHECK(cover2.optimal[0] == std::vector<Vertex>{1, 6});
    CHECK(oracle::brute_vertex_covers(path_tree(2)).count == 2);

    const oracle::OracleBound wide{18, std::uint64_t{1} << 24};
    CHECK(oracle::brute_vertex_covers(fixture("fig4"), wide).optimum == 7);
}

TEST_CASE("domination census") {
    CHECK(oracle::brute_dominating_sets(fixture("fig3"), {16, std::uint64_t{1} << 24}) == 5);
    CHECK(oracle::brute_dominating_sets(star_tree(4)) == 1);
    CHECK(oracle::brute_dominating_sets(path_tree(3)) == 1);
}

TEST_CASE("oracles refuse trees beyond the bound") {
    CHECK_THROWS_AS(oracle::brute_matchings(path_tree(15)), TooLarge);
    CHECK_THROWS_AS(oracle::brute_independent_sets(fixture("fig4")), TooLarge);
    CHECK_THROWS_AS(oracle::brute_dominating_sets(path_tree(10), {10, 512}), TooLarge);
    CHECK_THROWS_AS(oracle::brute_vertex_covers(path_tree(2), {0, 16}), TooLarge);
}

TEST_CASE("oracle invariants on random trees") {
    for (const Tree& t : testing::random_corpus(200, 1, 14, 41)) {
        const auto mc = oracle::brute_matchings(t);
        const auto is = oracle::brute_independent_sets(t);
        const auto vc = oracle::brute_vertex_covers(t);
        const int gamma = oracle::brute_dominating_sets(t);
        CHECK(is.optimum + vc.optimum == t.order());
        CHECK(mc.nu == vc.optimum);
        CHECK(gamma <= is.optimum);
        CHECK(mc.m >= 1);
        CHECK(mc.by_size[static_cast<std::size_t>(mc.nu)] == mc.m);
        if (t.order() >= 2) CHECK(mc.by_size[1] == static_cast<std::uint64_t>(t.size()));
    }
}
