#pragma once

#include <cstdint>
#include <vector>

#include "nulltree/matching.hpp"
#include "nulltree/tree.hpp"

// Exhaustive reference implementations. Deliberately naive: they enumerate
// edge or vertex subsets straight from the definitions and share no code
// with the dynamic programs they are used to check.
namespace nulltree::oracle {

struct OracleBound {
    int max_n = 14;
    std::uint64_t max_subsets = std::uint64_t{1} << 24;
};

struct MatchingCensus {
    int nu = 0;
    std::uint64_t m = 0;                 // number of maximum matchings
    std::vector<Matching> all_max;       // sorted
    std::vector<std::uint64_t> by_size;  // by_size[k] = number of k-matchings
};

/// All matchings by include/exclude recursion over the edge list.
MatchingCensus brute_matchings(const Tree& t, const OracleBound& bound = {});

struct SetCensus {
    int optimum = 0;
    std::uint64_t count = 0;
    std::vector<std::vector<Vertex>> optimal;  // every optimal set, ascending bitmask order
};

/// Maximum independent sets over all 2^n vertex subsets.
SetCensus brute_independent_sets(const Tree& t, const OracleBound& bound = {});

/// Minimum vertex covers over all 2^n vertex subsets.
SetCensus brute_vertex_covers(const Tree& t, const OracleBound& bound = {});

/// Domination number over all 2^n vertex subsets.
int brute_dominating_sets(const Tree& t, const OracleBound& bound = {});

}  // namespace nulltree::oracle
