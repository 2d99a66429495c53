#include <doctest.h>

#include <sstream>

#include "nulltree/cli.hpp"
#include "support.hpp"

using namespace nulltree;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture_path(const char* name) { return std::string(NULLTREE_FIXTURE_DIR) + "/" + name + ".txt"; }

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("decompose reports formulas and DP values") {
    const Run r = run({"decompose", "--input", fixture_path("fig4")});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["m"] == 18);
    CHECK(j["nu"] == 7);
    CHECK(j["alpha"] == 11);
    CHECK(j["nullity"] == 4);
    CHECK(j["rank"] == 14);
    CHECK(j["dp"]["m"] == 18);
    CHECK(j["connection_edges"] == Json::parse("[[1,13],[4,14],[9,13],[9,16]]"));
    CHECK(j["s_components"][0] == Json::parse(R"({"vertices":[1,2,3],"edges":[[1,2],[1,3]],"supp":[2,3],"core":[1]})"));
}

TEST_CASE("decompose reads standard input") {
    const Run r = run({"decompose", "--input", "-"}, "1\n");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["supp"] == Json::parse("[1]"));
    CHECK(j["core"] == Json::array());
    CHECK(j["m"] == 1);

    const Run text = run({"decompose", "--format", "text"}, "2\n1 2\n");
    CHECK(text.code == 0);
    CHECK(text.out.find("N-component: 1 2") != std::string::npos);
}

TEST_CASE("input errors exit with 1") {
    const Run bad = run({"decompose"}, "3\n1 2\n");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NotATree") != std::string::npos);
    CHECK(run({"decompose"}, "garbage\n").code == 1);
    CHECK(run({"dot", "--input", "/nonexistent/tree.txt"}).code == 1);
    CHECK(run({"verify"}, "").code == 1);
}

TEST_CASE("usage errors exit with 1, help with 0") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"decompose", "--format", "yaml"}).code == 1);
    CHECK(run({"batch", "--n", "5..2"}).code == 1);
    CHECK(run({"batch", "--n", "seven"}).code == 1);
    CHECK(run({"batch", "--count", "-3"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify on the fixtures") {
    const Run r1 = run({"verify", "--input", fixture_path("fig1")});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("neumaier-refutation") != std::string::npos);
    CHECK(r1.out.find("nullity(T-6)=3") != std::string::npos);

    const Run r2 = run({"verify", "--input", fixture_path("fig2"), "--format", "text"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("pass supp-from-two-oracles: Supp = EG") != std::string::npos);

    const Run r3 = run({"verify", "--input", fixture_path("fig3")});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("gamma=5") != std::string::npos);
}

TEST_CASE("batch") {
    const Run zero = run({"batch", "--count", "0", "--format", "text"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "0/0 pass\n");

    const Run too_big = run({"batch", "--n", "1..30"});
    CHECK(too_big.code == 1);
    CHECK(too_big.err.find("oracle bound") != std::string::npos);

    const Run some = run({"batch", "--count", "40", "--n", "1..12", "--seed", "5", "--format", "text"});
    CHECK(some.code == 0);
    CHECK(some.out == "40/40 pass\n");

    const Run a = run({"batch", "--count", "30", "--seed", "9"});
    const Run b = run({"batch", "--count", "30", "--seed", "9"});
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["summary"] == "30/30 pass");
    CHECK(a.out != run({"batch", "--count", "30", "--seed", "10"}).out);
}

TEST_CASE("batch output does not depend on the worker count") {
    BatchConfig c;
    c.seed = 77;
    c.count = 25;
    c.threads = 1;
    const Json one = run_batch(c).report;
    c.threads = 4;
    CHECK(run_batch(c).report.dump() == one.dump());
}

TEST_CASE("dot export") {
    const Run r4 = run({"dot", "--input", fixture_path("fig4")});
    CHECK(r4.code == 0);
    CHECK(count(r4.out, "style=dashed") == 4);
    const Run r2 = run({"dot", "--input", fixture_path("fig2")});
    CHECK(count(r2.out, "style=filled") == 6);
    const Run k2 = run({"dot"}, "2\n1 2\n");
    CHECK(k2.out == "graph T {\n  1 [class=nvert];\n  2 [class=nvert];\n  1 -- 2;\n}\n");
    CHECK(run({"decompose", "--format", "dot", "--input", fixture_path("fig4")}).out == r4.out);
}

TEST_CASE("integers beyond 64 bits serialize as strings") {
    CHECK(integer_json(Integer(42)) == 42);
    CHECK(integer_json(Integer("18446744073709551615")) == 18446744073709551615ULL);
    CHECK(integer_json(Integer("18446744073709551616")) == "18446744073709551616");
    CHECK(integer_json(Integer(-5)) == -5);
}
