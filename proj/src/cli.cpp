#include "nulltree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "nulltree/errors.hpp"

namespace nulltree {

namespace {

struct RunConfig {
    std::string input = "-";
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::string n_range = "1..14";
    int oracle_bound = 14;
    std::string format = "json";
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw ParseError("expected --n A..B, got '" + text + "'");
    }
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a_text = text.substr(0, dots);
        const std::string b_text = text.substr(dots + 2);
        const int a = std::stoi(a_text, &used_a);
        const int b = std::stoi(b_text, &used_b);
        if (used_a != a_text.size() || used_b != b_text.size() || a < 1 || b < a) {
            throw ParseError("invalid range '" + text + "'");
        }
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError("invalid range '" + text + "'");
    }
}

Tree read_input(const std::string& path, std::istream& in) {
    std::ostringstream text;
    if (path == "-") {
        text << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) {
            throw ParseError("cannot open '" + path + "'");
        }
        text << file.rdbuf();
    }
    return parse_tree(text.str());
}

void print_set(std::ostream& out, const char* label, const std::vector<Vertex>& xs) {
    out << label << ':';
    for (Vertex v : xs) out << ' ' << v;
    out << '\n';
}

int cmd_decompose(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const Tree t = read_input(cfg.input, in);
    const Decomposition d = decompose(t);
    if (cfg.format == "dot") {
        out << to_dot(t, &d);
        return kExitOk;
    }
    const Formulas f = formulas(t, d);
    const CountResult mc = matching_count(t);
    const RankNullity rn = rank_nullity(adjacency_matrix(t));
    const Formulas dp{mc.optimum, independence(t).alpha, mc.count, rn.nullity};
    const bool consistent = f == dp;

    if (cfg.format == "text") {
        out << "n: " << t.order() << '\n';
        print_set(out, "supp", d.supp);
        print_set(out, "core", d.core);
        for (const Part& p : d.s_parts) print_set(out, "S-component", p.vertices());
        for (const Part& p : d.n_parts) print_set(out, "N-component", p.vertices());
        out << "connection edges:";
        for (const Edge& e : d.connection_edges) out << ' ' << e.u << '-' << e.v;
        out << "\nnu: " << f.nu << " (dp " << dp.nu << ")\nalpha: " << f.alpha << " (dp " << dp.alpha
            << ")\nm: " << f.m << " (dp " << dp.m << ")\nnullity: " << f.nullity << " (elimination " << dp.nullity
            << ")\nrank: " << rn.rank << '\n';
    } else {
        Json j = decomposition_json(d);
        j["nu"] = f.nu;
        j["alpha"] = f.alpha;
        j["m"] = integer_json(f.m);
        j["nullity"] = f.nullity;
        j["rank"] = rn.rank;
        j["dp"] = formulas_json(dp);
        j["consistent"] = consistent;
        out << j.dump(2) << '\n';
    }
    if (!consistent) {
        err << "error: decomposition formulas disagree with the dynamic programs\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const Tree t = read_input(cfg.input, in);
    VerifyOptions options;
    options.bound.max_n = cfg.oracle_bound;
    options.seed = cfg.seed;
    const VerificationReport report = verify(t, options);
    if (cfg.format == "text") {
        for (const Check& c : report.checks) {
            out << status_name(c.status) << ' ' << c.name;
            if (!c.detail.empty()) out << ": " << c.detail;
            out << '\n';
        }
        out << (report.passed() ? "PASS" : "FAIL") << '\n';
    } else {
        Json j{{"n", t.order()}};
        j.update(report_json(report));
        out << j.dump(2) << '\n';
    }
    if (!report.passed()) {
        for (const Check& c : report.checks) {
            if (c.status == CheckStatus::Fail) err << "refuted: " << c.name << ": " << c.detail << '\n';
        }
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    BatchConfig bc;
    std::tie(bc.n_min, bc.n_max) = parse_range(cfg.n_range);
    if (bc.n_max > cfg.oracle_bound) {
        err << "error: --n upper end " << bc.n_max << " exceeds the oracle bound " << cfg.oracle_bound << '\n';
        return kExitUsage;
    }
    bc.seed = cfg.seed;
    bc.count = cfg.count;
    bc.bound.max_n = cfg.oracle_bound;
    const BatchResult r = run_batch(bc);
    if (cfg.format == "text") {
        out << r.passed << '/' << r.total << " pass\n";
        if (r.report.contains("first_failure")) out << r.report["first_failure"].dump() << '\n';
    } else {
        out << r.report.dump(2) << '\n';
    }
    return r.passed == r.total ? kExitOk : kExitFailure;
}

int cmd_dot(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const Tree t = read_input(cfg.input, in);
    const Decomposition d = decompose(t);
    out << to_dot(t, &d);
    return kExitOk;
}

}  // namespace

BatchResult run_batch(const BatchConfig& config) {
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw ParseError("invalid tree order range");
    }
    struct Outcome {
        int n = 0;
        std::uint64_t seed = 0;
        Tree tree = Tree::single_vertex();
        VerificationReport report;
        Formulas formulas;
    };
    std::vector<Outcome> outcomes(config.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < config.count; i = next++) {
            Outcome& o = outcomes[i];
            o.seed = splitmix64(config.seed ^ splitmix64(i));
            std::mt19937_64 rng(o.seed);
            o.n = std::uniform_int_distribution<int>(config.n_min, config.n_max)(rng);
            o.tree = random_tree(o.n, rng());
            VerifyOptions options;
            options.bound = config.bound;
            options.seed = o.seed;
            o.report = verify(o.tree, options);
            o.formulas = formulas(o.tree, decompose(o.tree));
        }
    };
    unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(config.count, 1)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    BatchResult result;
    result.total = config.count;
    Json trees = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const Outcome& o = outcomes[i];
        const bool ok = o.report.passed();
        result.passed += ok ? 1 : 0;
        trees.push_back(Json{{"index", i},
                             {"n", o.n},
                             {"seed", o.seed},
                             {"passed", ok},
                             {"formulas", formulas_json(o.formulas)}});
        if (!ok && !result.report.contains("first_failure")) {
            Json failed = Json::array();
            for (const Check& c : o.report.checks) {
                if (c.status == CheckStatus::Fail) failed.push_back(Json{{"name", c.name}, {"detail", c.detail}});
            }
            result.report["first_failure"] =
                Json{{"index", i}, {"n", o.n}, {"edges", edges_json(o.tree.edges())}, {"failed_checks", failed}};
        }
    }
    Json head{{"seed", config.seed},
              {"count", config.count},
              {"n_min", config.n_min},
              {"n_max", config.n_max},
              {"oracle_bound", config.bound.max_n},
              {"passed", result.passed},
              {"failed", result.total - result.passed},
              {"summary", std::to_string(result.passed) + "/" + std::to_string(result.total) + " pass"}};
    if (result.report.contains("first_failure")) head["first_failure"] = result.report["first_failure"];
    head["trees"] = std::move(trees);
    result.report = std::move(head);
    return result;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Null decomposition of trees", "nulltree"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "Edge-list file, or - for standard input")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember(std::move(formats)))
            ->capture_default_str();
    };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--oracle-bound", cfg.oracle_bound, "Largest order checked by brute force")
            ->check(CLI::Range(1, 62))
            ->capture_default_str();
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    };

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "Print the null decomposition and formulas");
    add_input(decompose_cmd);
    add_format(decompose_cmd, {"json", "text", "dot"});

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run every structural check on one tree");
    add_input(verify_cmd);
    add_format(verify_cmd, {"json", "text"});
    add_bound(verify_cmd);
    add_seed(verify_cmd);

    CLI::App* batch_cmd = app.add_subcommand("batch", "Verify seeded random trees");
    add_seed(batch_cmd);
    batch_cmd->add_option("--count", cfg.count, "Number of trees")->capture_default_str();
    batch_cmd->add_option("--n", cfg.n_range, "Tree order range A..B")->capture_default_str();
    add_bound(batch_cmd);
    add_format(batch_cmd, {"json", "text"});

    CLI::App* dot_cmd = app.add_subcommand("dot", "Graphviz rendering with decomposition classes");
    add_input(dot_cmd);
    add_format(dot_cmd, {"dot"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*decompose_cmd) return cmd_decompose(cfg, in, out, err);
        if (*verify_cmd) return cmd_verify(cfg, in, out, err);
        if (*batch_cmd) return cmd_batch(cfg, out, err);
        return cmd_dot(cfg, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"nulltree"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace nulltree
