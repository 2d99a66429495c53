#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nulltree/decomposition.hpp"
#include "nulltree/linalg.hpp"
#include "nulltree/oracle.hpp"
#include "nulltree/tree.hpp"

namespace nulltree {

/// True iff T has a perfect matching. Throws std::logic_error if that
/// disagrees with A(T) being invertible.
bool is_n_tree(const Tree& t);

/// Matching number, independence number, number of maximum matchings and
/// nullity, evaluated from the decomposition alone:
///   nu = |core| + |V(F_N)|/2, alpha = |supp| + |V(F_N)|/2,
///   m = product of m(S), nullity = sum of nullity(S) over the S-parts.
struct Formulas {
    int nu = 0;
    int alpha = 0;
    Integer m;
    int nullity = 0;

    friend bool operator==(const Formulas&, const Formulas&) = default;
};
Formulas formulas(const Tree& t, const Decomposition& d);

/// 0-eigenvalue vocabulary: essential = supported, special = core,
/// inessential = N-forest vertices.
struct NeumaierReport {
    int nullity = 0;
    bool s_tree = false;
    std::vector<Vertex> essential;
    std::vector<Vertex> special;
    std::vector<Vertex> inessential;

    struct Deletion {
        Vertex vertex = 0;
        int nullity = 0;  // nullity of T - vertex, by elimination
    };
    std::vector<Deletion> deletions;  // one per inessential vertex

    // Truth value of each statement on this tree.
    bool deletion_keeps_nullity = true;        // deleting an inessential vertex keeps the nullity
    bool no_inessential = true;                // no inessential vertices
    bool special_iff_always_saturated = true;  // special <=> saturated by every maximum matching
    bool edges_touch_special = true;           // every edge has one or two special endpoints
    bool special_count_is_nu = true;           // #special == nu, each maximum-matching edge has exactly one
};
NeumaierReport neumaier_counterexamples(const Tree& t);

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool passed() const;
    const Check* find(const std::string& name) const;
};

struct VerifyOptions {
    oracle::OracleBound bound;
    std::uint64_t seed = 0;
    // Cap on (e, u, v) rewiring samples; all triples are used below it.
    std::size_t rewire_samples = 24;
    // Cap on maximum matchings enumerated per tree.
    std::size_t enumeration_limit = 20000;
};

/// Names of the checks verify() runs, in report order.
const std::vector<std::string>& check_names();

/// Runs every structural check on t. Brute-force-backed checks are
/// skipped (not failed) when t exceeds the oracle bound.
VerificationReport verify(const Tree& t, const VerifyOptions& options = {});

}  // namespace nulltree
