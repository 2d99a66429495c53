#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nulltree/linalg.hpp"
#include "nulltree/tree.hpp"

namespace testing {

using namespace nulltree;

inline Tree fixture(const std::string& name) {
    std::ifstream in(std::string(NULLTREE_FIXTURE_DIR) + "/" + name + ".txt");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_tree(text.str());
}

inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline RationalVector vec(std::initializer_list<long> xs) {
    RationalVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Determinant by plain Gaussian elimination with row swaps. Written
// separately from the library's echelon code so it can serve as an oracle.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Rank by the same elimination, used to cross-check rank_nullity.
inline int rank_of(std::vector<std::vector<Rational>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline std::vector<std::vector<Rational>> adjacency_rows(const Tree& t) {
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (const Edge& e : t.edges()) {
        a[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = 1;
        a[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] = 1;
    }
    return a;
}

// det(xI - A) recovered from its values at x = 0..n by Lagrange
// interpolation; coefficients[i] multiplies x^i.
inline std::vector<Rational> charpoly_by_interpolation(const Tree& t) {
    const int n = t.order();
    const auto a = adjacency_rows(t);
    std::vector<Rational> result(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        auto m = a;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (auto& x : m[i]) x = -x;
            m[i][i] += k;
        }
        const Rational yk = determinant(m);
        // basis polynomial prod_{j != k} (x - j) / (k - j)
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == k) continue;
            std::vector<Rational> next(basis.size() + 1);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= basis[i] * j;
            }
            basis = std::move(next);
            denom *= k - j;
        }
        for (std::size_t i = 0; i < basis.size(); ++i) result[i] += yk * basis[i] / denom;
    }
    return result;
}

// Breadth-first reach from vertex 1.
inline std::size_t reachable_from_one(const Tree& t) {
    std::vector<bool> seen(static_cast<std::size_t>(t.order()) + 1, false);
    std::vector<Vertex> queue{1};
    seen[1] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex w : t.neighbors(queue[i])) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    return queue.size();
}

// Seeded corpus of small random trees for property tests.
inline std::vector<Tree> random_corpus(std::size_t count, int n_min, int n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Tree> out;
    for (std::size_t i = 0; i < count; ++i) {
        const int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
        out.push_back(random_tree(n, rng()));
    }
    return out;
}

}  // namespace testing
