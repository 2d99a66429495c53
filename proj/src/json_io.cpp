#include "nulltree/json_io.hpp"

#include <limits>

namespace nulltree {

Json integer_json(const Integer& z) {
    if (sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64) {
        std::uint64_t value = 0;
        mpz_export(&value, nullptr, -1, sizeof value, 0, 0, z.get_mpz_t());
        return value;
    }
    if (sgn(z) < 0 && z >= Integer(std::to_string(std::numeric_limits<std::int64_t>::min()))) {
        return std::stoll(z.get_str());
    }
    return z.get_str();
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) {
        out.push_back(edge_json(e));
    }
    return out;
}

Json matching_json(const Matching& m) { return edges_json(m.edges()); }

Json polynomial_json(const IntPolynomial& p) {
    Json out = Json::array();
    for (const Integer& c : p.coefficients) {
        out.push_back(integer_json(c));
    }
    return out;
}

Json vector_json(const RationalVector& x) {
    Json out = Json::array();
    for (const Rational& q : x) {
        out.push_back(to_string(q));
    }
    return out;
}

Json part_json(const Part& p) {
    return Json{{"vertices", p.vertices()},
                {"edges", edges_json(p.component.original_edges())},
                {"supp", p.supp},
                {"core", p.core}};
}

Json decomposition_json(const Decomposition& d) {
    Json s = Json::array();
    for (const Part& p : d.s_parts) {
        s.push_back(part_json(p));
    }
    Json n = Json::array();
    for (const Part& p : d.n_parts) {
        n.push_back(part_json(p));
    }
    return Json{{"n", d.order},
                {"supp", d.supp},
                {"core", d.core},
                {"n_forest_vertices", d.n_vertices},
                {"s_components", s},
                {"n_components", n},
                {"connection_edges", edges_json(d.connection_edges)}};
}

Json formulas_json(const Formulas& f) {
    return Json{{"nu", f.nu}, {"alpha", f.alpha}, {"m", integer_json(f.m)}, {"nullity", f.nullity}};
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::Skipped:
            return "skipped";
    }
    return "fail";
}

Json report_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    }
    return Json{{"passed", r.passed()}, {"checks", checks}};
}

}  // namespace nulltree
