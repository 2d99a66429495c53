#pragma once

#include <json.hpp>

#include "nulltree/analysis.hpp"
#include "nulltree/decomposition.hpp"
#include "nulltree/linalg.hpp"
#include "nulltree/matching.hpp"

namespace nulltree {

using Json = nlohmann::ordered_json;

/// A number when it fits in 64 bits, otherwise its decimal string.
Json integer_json(const Integer& z);

Json edge_json(const Edge& e);
Json edges_json(const std::vector<Edge>& edges);
Json matching_json(const Matching& m);
Json polynomial_json(const IntPolynomial& p);
Json vector_json(const RationalVector& x);  // entries as "p/q" strings

/// {vertices, edges, supp, core} in host labels.
Json part_json(const Part& p);

Json decomposition_json(const Decomposition& d);
Json formulas_json(const Formulas& f);
Json report_json(const VerificationReport& r);

const char* status_name(CheckStatus s);

}  // namespace nulltree
