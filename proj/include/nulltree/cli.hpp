#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nulltree/json_io.hpp"

namespace nulltree {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

struct BatchConfig {
    std::uint64_t seed = 0;
    std::size_t count = 100;
    int n_min = 1;
    int n_max = 14;
    oracle::OracleBound bound;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct BatchResult {
    Json report;
    std::size_t passed = 0;
    std::size_t total = 0;
};

/// Seeded random trees, each verified; results ordered by tree index.
BatchResult run_batch(const BatchConfig& config);

/// Entry point of the nulltree tool. Reads trees from `in` when --input is
/// "-" (the default).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nulltree
