#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nulltree/errors.hpp"
#include "support.hpp"

using namespace nulltree;
using testing::fixture;

namespace {

std::vector<Vertex> iota_set(int from, int to) {
    std::vector<Vertex> out(static_cast<std::size_t>(to - from + 1));
    std::iota(out.begin(), out.end(), from);
    return out;
}

}  // namespace

TEST_CASE("fixtures parse into trees of the documented size") {
    CHECK(fixture("fig1").order() == 6);
    CHECK(fixture("fig2").order() == 8);
    CHECK(fixture("fig3").order() == 16);
    CHECK(fixture("fig4").order() == 18);
    for (const char* name : {"fig1", "fig2", "fig3", "fig4"}) {
        const Tree t = fixture(name);
        CHECK(t.size() == t.order() - 1);
        CHECK(testing::reachable_from_one(t) == static_cast<std::size_t>(t.order()));
    }
}

TEST_CASE("parse_tree accepts comments, blank lines and a missing trailing newline") {
    const Tree t = parse_tree("# comment\n\n3\n# between\n1 2\n2 3");
    CHECK(t.order() == 3);
    CHECK(t.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(parse_tree("1\n").order() == 1);
}

TEST_CASE("parse_tree rejects malformed input") {
    CHECK_THROWS_AS(parse_tree(""), ParseError);
    CHECK_THROWS_AS(parse_tree("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("x\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("0\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("2\n1-2\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("3\n1 2\n"), NotATree);
    CHECK_THROWS_AS(parse_tree("2\n1 1\n"), NotATree);
    CHECK_THROWS_AS(parse_tree("2\n1 3\n"), NotATree);
    CHECK_THROWS_AS(parse_tree("4\n1 2\n2 3\n1 3\n"), NotATree);
    CHECK_THROWS_AS(parse_tree("3\n1 2\n1 2\n"), NotATree);
}

TEST_CASE("format_tree round-trips") {
    for (const Tree& t : testing::random_corpus(50, 1, 20, 3)) {
        CHECK(parse_tree(format_tree(t)) == t);
    }
    CHECK(format_tree(path_tree(3)) == "3\n1 2\n2 3\n");
}

TEST_CASE("Prüfer decoding") {
    const std::vector<Vertex> star_seq{4, 4};
    CHECK(tree_from_pruefer(4, star_seq).edges() == std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}});
    const std::vector<Vertex> path_seq{2, 3};
    CHECK(tree_from_pruefer(4, path_seq) == path_tree(4));
    CHECK(tree_from_pruefer(2, {}) == path_tree(2));
    CHECK(tree_from_pruefer(1, {}).order() == 1);
    const std::vector<Vertex> short_seq{1};
    CHECK_THROWS_AS(tree_from_pruefer(4, short_seq), DimensionMismatch);
    const std::vector<Vertex> bad_entry{5, 1};
    CHECK_THROWS_AS(tree_from_pruefer(4, bad_entry), InvalidVertex);
}

TEST_CASE("random_tree is deterministic per seed and always a tree") {
    CHECK(random_tree(12, 99) == random_tree(12, 99));
    CHECK(random_tree(1, 5).order() == 1);
    CHECK(random_tree(2, 5) == path_tree(2));
    bool differs = false;
    for (std::uint64_t s = 0; s < 10; ++s) differs = differs || !(random_tree(10, s) == random_tree(10, s + 100));
    CHECK(differs);
    for (const Tree& t : testing::random_corpus(200, 1, 40, 11)) {
        CHECK(t.size() == t.order() - 1);
        CHECK(testing::reachable_from_one(t) == static_cast<std::size_t>(t.order()));
    }
}

TEST_CASE("branches on either side of an edge partition the vertices") {
    const Tree t1 = fixture("fig1");
    CHECK(branch(t1, 1, 5) == std::vector<Vertex>{5, 6});
    CHECK(branch(t1, 5, 1) == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(branch(t1, 2, 6) == std::vector<Vertex>{6});
    CHECK_THROWS_AS(branch(t1, 3, 3), InvalidVertex);
    for (const Tree& t : testing::random_corpus(60, 2, 25, 5)) {
        for (const Edge& e : t.edges()) {
            auto a = branch(t, e.u, e.v);
            auto b = branch(t, e.v, e.u);
            std::vector<Vertex> both;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            CHECK(both == iota_set(1, t.order()));
            CHECK(a.size() + b.size() == static_cast<std::size_t>(t.order()));
        }
    }
}

TEST_CASE("attach_pendant requires the next free label") {
    const Tree p3 = path_tree(3);
    const Tree grown = attach_pendant(p3, 2, 4);
    CHECK(grown.order() == 4);
    CHECK(grown.has_edge({2, 4}));
    CHECK_THROWS_AS(attach_pendant(p3, 2, 3), LabelClash);
    CHECK_THROWS_AS(attach_pendant(p3, 2, 7), LabelClash);
    CHECK_THROWS_AS(attach_pendant(p3, 9, 4), InvalidVertex);
}

TEST_CASE("replace_edge and its inverse") {
    const Tree t = fixture("fig1");
    const Tree r = replace_edge(t, {1, 5}, {1, 6});
    CHECK(r.has_edge({1, 6}));
    CHECK_FALSE(r.has_edge({1, 5}));
    CHECK(replace_edge(r, {1, 6}, {1, 5}) == t);
    CHECK_THROWS_AS(replace_edge(t, {2, 3}, {1, 6}), InvalidVertex);
    CHECK_THROWS_AS(replace_edge(t, {1, 5}, {2, 3}), NotATree);
}

TEST_CASE("delete_vertex partitions the remaining vertices") {
    const Forest f = delete_vertex(fixture("fig1"), 1);
    REQUIRE(f.components.size() == 4);
    CHECK(f.components[0].labels == std::vector<Vertex>{2});
    CHECK(f.components[3].labels == std::vector<Vertex>{5, 6});
    CHECK(f.components[3].tree == path_tree(2));
    CHECK(delete_vertex(Tree::single_vertex(), 1).components.empty());
    for (const Tree& t : testing::random_corpus(40, 1, 20, 8)) {
        for (Vertex v = 1; v <= t.order(); ++v) {
            const Forest rest = delete_vertex(t, v);
            std::vector<Vertex> all;
            std::size_t edges = 0;
            for (const auto& c : rest.components) {
                all.insert(all.end(), c.labels.begin(), c.labels.end());
                edges += c.original_edges().size();
            }
            std::sort(all.begin(), all.end());
            auto expected = iota_set(1, t.order());
            expected.erase(expected.begin() + (v - 1));
            CHECK(all == expected);
            CHECK(edges == static_cast<std::size_t>(t.size() - t.degree(v)));
            CHECK(rest.order() == static_cast<std::size_t>(t.order() - 1));
        }
    }
}

TEST_CASE("induced components keep the label map") {
    const Tree t = fixture("fig4");
    std::vector<bool> keep(19, false);
    for (Vertex v : {13, 14, 15, 16, 17, 18}) keep[static_cast<std::size_t>(v)] = true;
    const auto parts = induced_components(t, keep);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].labels == std::vector<Vertex>{13, 14});
    CHECK(parts[1].labels == std::vector<Vertex>{15, 16, 17, 18});
    CHECK(parts[1].original(2) == 16);
    CHECK(parts[1].local(17) == 3);
    CHECK_FALSE(parts[1].local(13).has_value());
    CHECK(parts[1].original_edges() == std::vector<Edge>{{15, 16}, {16, 17}, {17, 18}});
}

TEST_CASE("tree accessors") {
    const Tree s = star_tree(5);
    CHECK(s.degree(1) == 4);
    CHECK(std::vector<Vertex>(s.neighbors(1).begin(), s.neighbors(1).end()) == std::vector<Vertex>{2, 3, 4, 5});
    CHECK(s.adjacent(3, 1));
    CHECK_FALSE(s.adjacent(3, 2));
    CHECK_THROWS_AS(s.require_vertex(6), InvalidVertex);
    CHECK(Edge(5, 2) == Edge(2, 5));
    CHECK(Edge(5, 2).other(5) == 2);
}
